#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace divisive {

using ProposalIndex = std::size_t;
using AgentId = std::uint64_t;

/// Ordered set of distinct proposal labels. Index i names proposal i everywhere else.
class ProposalSet {
 public:
  explicit ProposalSet(std::vector<std::string> names);

  /// Single-letter labels "a", "b", ... for m <= 26, otherwise "p1", "p2", ...
  static ProposalSet letters(std::size_t m);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(ProposalIndex x) const;
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<ProposalIndex> find(std::string_view label) const;
  /// Throws InputError on an unknown label.
  ProposalIndex index_of(std::string_view label) const;

  friend bool operator==(const ProposalSet&, const ProposalSet&) = default;

 private:
  std::vector<std::string> names_;
};

/// A strict linear order over proposals 0..m-1, best first, with O(1) position lookup.
class Ranking {
 public:
  explicit Ranking(std::vector<ProposalIndex> order);

  static Ranking identity(std::size_t m);

  std::size_t size() const noexcept { return order_.size(); }
  std::span<const ProposalIndex> order() const noexcept { return order_; }
  ProposalIndex at(std::size_t slot) const { return order_.at(slot); }
  /// 1-based position: 1 + number of proposals ranked above x.
  std::size_t position(ProposalIndex x) const;
  bool prefers(ProposalIndex x, ProposalIndex y) const { return position(x) < position(y); }

  Ranking reversed() const;
  Ranking with_top(ProposalIndex x) const;
  Ranking relabeled(std::span<const ProposalIndex> sigma) const;

  friend bool operator==(const Ranking& a, const Ranking& b) { return a.order_ == b.order_; }
  friend auto operator<=>(const Ranking& a, const Ranking& b) { return a.order_ <=> b.order_; }

 private:
  std::vector<ProposalIndex> order_;
  std::vector<std::size_t> position_;
};

struct Entry {
  AgentId agent;
  Ranking ranking;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Profile restricted to a coalition; may be empty.
class SubProfile {
 public:
  SubProfile(ProposalSet proposals, std::vector<Entry> entries);
  SubProfile(std::shared_ptr<const ProposalSet> proposals, std::vector<Entry> entries);

  const ProposalSet& proposals() const noexcept { return *proposals_; }
  const std::shared_ptr<const ProposalSet>& shared_proposals() const noexcept { return proposals_; }
  std::size_t num_proposals() const noexcept { return proposals_->size(); }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::span<const Entry> entries() const noexcept { return entries_; }
  const Entry& entry(std::size_t index) const { return entries_.at(index); }

  bool contains(AgentId agent) const;
  /// Throws InputError when the agent is absent.
  const Ranking& ranking_of(AgentId agent) const;
  std::vector<AgentId> agents() const;
  AgentId max_agent() const;

  friend bool operator==(const SubProfile& a, const SubProfile& b) {
    return *a.proposals_ == *b.proposals_ && a.entries_ == b.entries_;
  }

 protected:
  std::shared_ptr<const ProposalSet> proposals_;
  std::vector<Entry> entries_;
  std::map<AgentId, std::size_t> index_;
};

/// A full profile: a nonempty electorate, each agent holding one ranking.
class Profile : public SubProfile {
 public:
  Profile(ProposalSet proposals, std::vector<Entry> entries);
  Profile(std::shared_ptr<const ProposalSet> proposals, std::vector<Entry> entries);
  /// Agents get ids 0..n-1 in the order given.
  Profile(ProposalSet proposals, const std::vector<Ranking>& rankings);

  /// Promotes a nonempty subprofile. Throws InputError when empty.
  explicit Profile(SubProfile sub);
};

std::size_t position(const SubProfile& profile, AgentId agent, ProposalIndex x);

/// Agents ranking x above y, in profile order.
std::vector<AgentId> supporters(const SubProfile& profile, ProposalIndex x, ProposalIndex y);

SubProfile restrict_to(const SubProfile& profile, std::span<const AgentId> coalition);

/// R (+) R2. Throws DisjointnessError on shared agent ids, InputError on differing proposal sets.
Profile profile_union(const Profile& first, const Profile& second);

Profile invert(const Profile& profile);

Profile move_to_top(const Profile& profile, ProposalIndex x);

/// All m! rankings in lexicographic order of their proposal sequence.
std::vector<Ranking> all_rankings(std::size_t m);

/// k copies of every ranking, ids first_agent .. first_agent + k*m! - 1.
Profile perfectly_uniform(std::size_t m, std::size_t k, AgentId first_agent = 0);
Profile perfectly_uniform(const ProposalSet& proposals, std::size_t k, AgentId first_agent = 0);

/// R o sigma. `sigma` maps each agent of the result to the agent of `profile` whose ranking it
/// takes; it must be a bijection onto the profile's electorate. Result entries are ordered by id.
Profile apply_agent_bijection(const Profile& profile, const std::map<AgentId, AgentId>& sigma);

/// sigma(R): every ranking relabeled pointwise, sigma[x] being the new name of x.
Profile apply_proposal_permutation(const Profile& profile, std::span<const ProposalIndex> sigma);

bool are_clones(const SubProfile& profile, ProposalIndex x, ProposalIndex y);

bool pareto_dominates(const SubProfile& profile, ProposalIndex x, ProposalIndex y);

bool is_unanimous(const SubProfile& profile);

/// The position x holds in every ranking, if it is the same throughout.
std::optional<std::size_t> fixed_position(const SubProfile& profile, ProposalIndex x);

/// True when each of the m! rankings occurs equally often.
bool is_perfectly_uniform(const SubProfile& profile);

/// Anonymity-invariant key: the sorted multiset of rankings.
using CanonicalForm = std::vector<std::vector<ProposalIndex>>;
CanonicalForm canonical_form(const SubProfile& profile);

/// Throws InputError unless sigma is a permutation of 0..m-1.
void require_permutation(std::span<const ProposalIndex> sigma, std::size_t m);

}  // namespace divisive
