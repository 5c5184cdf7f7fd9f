#include "divisive/profile.hpp"

#include "divisive/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace divisive {

// ---------------------------------------------------------------------------
// ProposalSet

ProposalSet::ProposalSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw InputError("a proposal set needs at least one proposal");
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InputError("empty proposal label");
    if (!seen.insert(n).second) throw InputError("duplicate proposal label '" + n + "'");
  }
}

ProposalSet ProposalSet::letters(std::size_t m) {
  std::vector<std::string> names;
  names.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    names.push_back(m <= 26 ? std::string(1, static_cast<char>('a' + i)) : "p" + std::to_string(i + 1));
  }
  return ProposalSet(std::move(names));
}

const std::string& ProposalSet::name(ProposalIndex x) const {
  if (x >= names_.size()) throw InputError("unknown proposal index " + std::to_string(x));
  return names_[x];
}

std::optional<ProposalIndex> ProposalSet::find(std::string_view label) const {
  auto it = std::find(names_.begin(), names_.end(), label);
  if (it == names_.end()) return std::nullopt;
  return static_cast<ProposalIndex>(it - names_.begin());
}

ProposalIndex ProposalSet::index_of(std::string_view label) const {
  if (auto x = find(label)) return *x;
  throw InputError("unknown proposal '" + std::string(label) + "'");
}

// ---------------------------------------------------------------------------
// Ranking

Ranking::Ranking(std::vector<ProposalIndex> order) : order_(std::move(order)) {
  require_permutation(order_, order_.size());
  position_.resize(order_.size());
  for (std::size_t slot = 0; slot < order_.size(); ++slot) position_[order_[slot]] = slot + 1;
}

Ranking Ranking::identity(std::size_t m) {
  std::vector<ProposalIndex> order(m);
  std::iota(order.begin(), order.end(), ProposalIndex{0});
  return Ranking(std::move(order));
}

std::size_t Ranking::position(ProposalIndex x) const {
  if (x >= position_.size()) throw InputError("unknown proposal index " + std::to_string(x));
  return position_[x];
}

Ranking Ranking::reversed() const { return Ranking(std::vector<ProposalIndex>(order_.rbegin(), order_.rend())); }

Ranking Ranking::with_top(ProposalIndex x) const {
  if (x >= order_.size()) throw InputError("unknown proposal index " + std::to_string(x));
  std::vector<ProposalIndex> out;
  out.reserve(order_.size());
  out.push_back(x);
  for (auto y : order_)
    if (y != x) out.push_back(y);
  return Ranking(std::move(out));
}

Ranking Ranking::relabeled(std::span<const ProposalIndex> sigma) const {
  std::vector<ProposalIndex> out;
  out.reserve(order_.size());
  for (auto y : order_) out.push_back(sigma[y]);
  return Ranking(std::move(out));
}

void require_permutation(std::span<const ProposalIndex> sigma, std::size_t m) {
  if (sigma.size() != m) throw InputError("expected a permutation of " + std::to_string(m) + " proposals");
  std::vector<bool> seen(m, false);
  for (auto x : sigma) {
    if (x >= m || seen[x]) throw InputError("not a permutation of the proposals");
    seen[x] = true;
  }
}

// ---------------------------------------------------------------------------
// SubProfile / Profile

SubProfile::SubProfile(ProposalSet proposals, std::vector<Entry> entries)
    : SubProfile(std::make_shared<const ProposalSet>(std::move(proposals)), std::move(entries)) {}

SubProfile::SubProfile(std::shared_ptr<const ProposalSet> proposals, std::vector<Entry> entries)
    : proposals_(std::move(proposals)), entries_(std::move(entries)) {
  if (!proposals_) throw InputError("missing proposal set");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].ranking.size() != proposals_->size())
      throw InputError("ranking of agent " + std::to_string(entries_[i].agent) + " does not cover all " +
                       std::to_string(proposals_->size()) + " proposals");
    if (!index_.emplace(entries_[i].agent, i).second)
      throw InputError("duplicate agent id " + std::to_string(entries_[i].agent));
  }
}

bool SubProfile::contains(AgentId agent) const { return index_.contains(agent); }

const Ranking& SubProfile::ranking_of(AgentId agent) const {
  auto it = index_.find(agent);
  if (it == index_.end()) throw InputError("unknown agent " + std::to_string(agent));
  return entries_[it->second].ranking;
}

std::vector<AgentId> SubProfile::agents() const {
  std::vector<AgentId> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.agent);
  return out;
}

AgentId SubProfile::max_agent() const {
  if (index_.empty()) throw InputError("empty profile has no agents");
  return index_.rbegin()->first;
}

Profile::Profile(ProposalSet proposals, std::vector<Entry> entries)
    : Profile(std::make_shared<const ProposalSet>(std::move(proposals)), std::move(entries)) {}

Profile::Profile(std::shared_ptr<const ProposalSet> proposals, std::vector<Entry> entries)
    : SubProfile(std::move(proposals), std::move(entries)) {
  if (entries_.empty()) throw InputError("a profile needs a nonempty electorate");
}

namespace {
std::vector<Entry> sequential_entries(const std::vector<Ranking>& rankings) {
  std::vector<Entry> entries;
  entries.reserve(rankings.size());
  for (std::size_t i = 0; i < rankings.size(); ++i) entries.push_back({static_cast<AgentId>(i), rankings[i]});
  return entries;
}
}  // namespace

Profile::Profile(ProposalSet proposals, const std::vector<Ranking>& rankings)
    : Profile(std::move(proposals), sequential_entries(rankings)) {}

Profile::Profile(SubProfile sub) : SubProfile(std::move(sub)) {
  if (entries_.empty()) throw InputError("a profile needs a nonempty electorate");
}

// ---------------------------------------------------------------------------
// Operations

std::size_t position(const SubProfile& profile, AgentId agent, ProposalIndex x) {
  if (x >= profile.num_proposals()) throw InputError("unknown proposal index " + std::to_string(x));
  return profile.ranking_of(agent).position(x);
}

namespace {
void require_distinct_proposals(const SubProfile& profile, ProposalIndex x, ProposalIndex y) {
  const auto m = profile.num_proposals();
  if (x >= m || y >= m) throw InputError("unknown proposal index");
  if (x == y) throw InputError("expected two distinct proposals");
}
}  // namespace

std::vector<AgentId> supporters(const SubProfile& profile, ProposalIndex x, ProposalIndex y) {
  require_distinct_proposals(profile, x, y);
  std::vector<AgentId> out;
  for (const auto& e : profile.entries())
    if (e.ranking.prefers(x, y)) out.push_back(e.agent);
  return out;
}

SubProfile restrict_to(const SubProfile& profile, std::span<const AgentId> coalition) {
  std::set<AgentId> members;
  for (auto a : coalition) {
    if (!profile.contains(a)) throw InputError("coalition contains unknown agent " + std::to_string(a));
    members.insert(a);
  }
  std::vector<Entry> entries;
  entries.reserve(members.size());
  for (const auto& e : profile.entries())
    if (members.contains(e.agent)) entries.push_back(e);
  return SubProfile(profile.shared_proposals(), std::move(entries));
}

Profile profile_union(const Profile& first, const Profile& second) {
  if (first.proposals() != second.proposals())
    throw InputError("cannot join profiles over different proposal sets");
  for (const auto& e : second.entries())
    if (first.contains(e.agent))
      throw DisjointnessError("agent " + std::to_string(e.agent) + " occurs in both profiles");
  std::vector<Entry> entries(first.entries().begin(), first.entries().end());
  entries.insert(entries.end(), second.entries().begin(), second.entries().end());
  return Profile(first.shared_proposals(), std::move(entries));
}

Profile invert(const Profile& profile) {
  std::vector<Entry> entries;
  entries.reserve(profile.size());
  for (const auto& e : profile.entries()) entries.push_back({e.agent, e.ranking.reversed()});
  return Profile(profile.shared_proposals(), std::move(entries));
}

Profile move_to_top(const Profile& profile, ProposalIndex x) {
  if (x >= profile.num_proposals()) throw InputError("unknown proposal index " + std::to_string(x));
  std::vector<Entry> entries;
  entries.reserve(profile.size());
  for (const auto& e : profile.entries()) entries.push_back({e.agent, e.ranking.with_top(x)});
  return Profile(profile.shared_proposals(), std::move(entries));
}

std::vector<Ranking> all_rankings(std::size_t m) {
  std::vector<ProposalIndex> order(m);
  std::iota(order.begin(), order.end(), ProposalIndex{0});
  std::vector<Ranking> out;
  do {
    out.emplace_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

Profile perfectly_uniform(const ProposalSet& proposals, std::size_t k, AgentId first_agent) {
  if (k == 0) throw InputError("perfectly uniform profile needs k >= 1");
  const auto rankings = all_rankings(proposals.size());
  std::vector<Entry> entries;
  entries.reserve(rankings.size() * k);
  AgentId next = first_agent;
  for (const auto& r : rankings)
    for (std::size_t copy = 0; copy < k; ++copy) entries.push_back({next++, r});
  return Profile(proposals, std::move(entries));
}

Profile perfectly_uniform(std::size_t m, std::size_t k, AgentId first_agent) {
  if (m == 0) throw InputError("perfectly uniform profile needs m >= 1");
  return perfectly_uniform(ProposalSet::letters(m), k, first_agent);
}

Profile apply_agent_bijection(const Profile& profile, const std::map<AgentId, AgentId>& sigma) {
  if (sigma.size() != profile.size())
    throw InputError("agent bijection must cover exactly the profile's electorate");
  std::set<AgentId> images;
  std::vector<Entry> entries;
  entries.reserve(sigma.size());
  for (const auto& [target, source] : sigma) {
    if (!profile.contains(source)) throw InputError("agent bijection maps onto unknown agent " + std::to_string(source));
    if (!images.insert(source).second) throw InputError("agent mapping is not injective");
    entries.push_back({target, profile.ranking_of(source)});
  }
  return Profile(profile.shared_proposals(), std::move(entries));
}

Profile apply_proposal_permutation(const Profile& profile, std::span<const ProposalIndex> sigma) {
  require_permutation(sigma, profile.num_proposals());
  std::vector<Entry> entries;
  entries.reserve(profile.size());
  for (const auto& e : profile.entries()) entries.push_back({e.agent, e.ranking.relabeled(sigma)});
  return Profile(profile.shared_proposals(), std::move(entries));
}

bool are_clones(const SubProfile& profile, ProposalIndex x, ProposalIndex y) {
  require_distinct_proposals(profile, x, y);
  return std::all_of(profile.entries().begin(), profile.entries().end(), [&](const Entry& e) {
    const auto px = e.ranking.position(x), py = e.ranking.position(y);
    return (px > py ? px - py : py - px) == 1;
  });
}

bool pareto_dominates(const SubProfile& profile, ProposalIndex x, ProposalIndex y) {
  require_distinct_proposals(profile, x, y);
  return std::all_of(profile.entries().begin(), profile.entries().end(),
                     [&](const Entry& e) { return e.ranking.prefers(x, y); });
}

bool is_unanimous(const SubProfile& profile) {
  const auto entries = profile.entries();
  return std::all_of(entries.begin(), entries.end(),
                     [&](const Entry& e) { return e.ranking == entries.front().ranking; });
}

std::optional<std::size_t> fixed_position(const SubProfile& profile, ProposalIndex x) {
  if (x >= profile.num_proposals()) throw InputError("unknown proposal index " + std::to_string(x));
  if (profile.empty()) return std::nullopt;
  const auto p = profile.entry(0).ranking.position(x);
  for (const auto& e : profile.entries())
    if (e.ranking.position(x) != p) return std::nullopt;
  return p;
}

bool is_perfectly_uniform(const SubProfile& profile) {
  const auto m = profile.num_proposals();
  std::size_t factorial = 1;
  for (std::size_t i = 2; i <= m; ++i) factorial *= i;
  if (profile.empty() || profile.size() % factorial != 0) return false;
  std::map<std::vector<ProposalIndex>, std::size_t> counts;
  for (const auto& e : profile.entries())
    ++counts[std::vector<ProposalIndex>(e.ranking.order().begin(), e.ranking.order().end())];
  if (counts.size() != factorial) return false;
  const auto k = profile.size() / factorial;
  return std::all_of(counts.begin(), counts.end(), [&](const auto& kv) { return kv.second == k; });
}

CanonicalForm canonical_form(const SubProfile& profile) {
  CanonicalForm out;
  out.reserve(profile.size());
  for (const auto& e : profile.entries()) out.emplace_back(e.ranking.order().begin(), e.ranking.order().end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace divisive
