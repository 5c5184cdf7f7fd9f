#pragma once

#include "divisive/bipartition.hpp"
#include "divisive/indices.hpp"
#include "divisive/monte_carlo.hpp"
#include "divisive/profile.hpp"
#include "divisive/rational.hpp"
#include "divisive/scoring.hpp"
#include "divisive/voting.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace divisive {

/// How splits {C, complement} are weighted: exactly uniform over all splits with both sides
/// nonempty, or estimated from seeded uniform samples.
class DecompositionScheme {
 public:
  static constexpr std::size_t kDefaultExactCap = 20;
  static constexpr std::size_t kDefaultStateBudget = 4'000'000;

  static DecompositionScheme exact_uniform(std::size_t cap = kDefaultExactCap);
  static DecompositionScheme monte_carlo(std::size_t samples, std::uint64_t seed);

  bool is_exact() const noexcept { return samples_ == 0; }
  std::size_t exact_cap() const noexcept { return cap_; }
  std::size_t samples() const noexcept { return samples_; }
  std::uint64_t seed() const noexcept { return seed_; }
  unsigned threads() const noexcept { return threads_; }
  /// Largest number of distinct coalition tallies the exact counting path may hold.
  std::size_t state_budget() const noexcept { return state_budget_; }

  DecompositionScheme& with_threads(unsigned threads);
  DecompositionScheme& with_state_budget(std::size_t budget);

  /// "exact" or "mc:<samples>".
  std::string describe() const;

 private:
  DecompositionScheme() = default;

  std::size_t cap_ = kDefaultExactCap;
  std::size_t samples_ = 0;
  std::uint64_t seed_ = 0;
  unsigned threads_ = 1;
  std::size_t state_budget_ = kDefaultStateBudget;
};

/// Parses "exact" or "mc:<samples>".
DecompositionScheme parse_sampling(std::string_view text, std::uint64_t seed, std::size_t exact_cap);

enum class Direction { max, min };

/// Per-proposal divisiveness and the selected set. Exact reports fill `values`; Monte Carlo
/// reports fill `estimates` instead and select every proposal within noise of the best estimate
/// (see run_monte_carlo).
struct DivisivenessReport {
  std::vector<Rational> values;
  std::vector<Estimate> estimates;
  std::vector<ProposalIndex> selection;
  Direction direction = Direction::max;
  std::string method;

  bool is_exact() const noexcept { return estimates.empty(); }
  bool selects(ProposalIndex x) const;
};

/// Indices attaining the max (or min) value. Ties are all kept.
std::vector<ProposalIndex> select_extreme(const std::vector<Rational>& values, Direction direction);
std::vector<ProposalIndex> select_extreme(const std::vector<Estimate>& values, Direction direction);

/// Proposals whose positions vary most: population variance of pos_i(x) over agents.
DivisivenessReport rank_variance_dsf(const Profile& profile);

/// Mean over y != x of |s(N_{x>y}, x) - s(N_{y>x}, x)|, a pair contributing 0 when one side is empty.
DivisivenessReport navarrete_dsf(const Profile& profile, const ScoringScheme& scheme);

/// Expected |s(R|C, x) - s(R|D, x)| over the decomposition scheme.
/// Exact mode enumerates splits for n <= cap and otherwise counts coalitions per distinct tally;
/// the latter throws CapacityError when it would exceed the scheme's state budget.
DivisivenessReport score_based_dsf(const Profile& profile, const ScoringScheme& scheme,
                                   const DecompositionScheme& decomposition);

/// Expected |win_share(R|C, x) - win_share(R|D, x)| over the decomposition scheme.
DivisivenessReport scf_based_dsf(const Profile& profile, const Scf& rule, const DecompositionScheme& decomposition);

/// Proposals whose move to the top of every ranking minimises the index (direction min).
DivisivenessReport index_based_dsf(const Profile& profile, const ProfileIndex& index);

/// Weight of split {C, D} when scoring proposal x: the general decomposition distribution p_{R,x}.
using DecompositionWeight = std::function<Rational(const Profile&, ProposalIndex, const Bipartition&)>;

/// Score-based DSF under an arbitrary decomposition distribution, by direct enumeration of the
/// splits with both sides nonempty (the empty split contributes 0 regardless of its weight).
DivisivenessReport weighted_score_dsf(const Profile& profile, const ScoringScheme& scheme,
                                      const DecompositionWeight& weight, std::size_t cap = 20);

/// A named DSF instance usable by the axiom laboratory.
class Dsf {
 public:
  using Procedure = std::function<DivisivenessReport(const Profile&)>;

  Dsf(std::string name, Procedure procedure);

  const std::string& name() const noexcept { return name_; }
  DivisivenessReport evaluate(const Profile& profile) const { return procedure_(profile); }
  std::vector<ProposalIndex> select(const Profile& profile) const { return procedure_(profile).selection; }

 private:
  std::string name_;
  Procedure procedure_;
};

enum class DsfMethod { rank_variance, navarrete, score, scf, index };

/// CLI-level description of a DSF instance.
struct DsfSpec {
  DsfMethod method = DsfMethod::navarrete;
  std::string scheme = "nborda";  // navarrete / score
  std::string scf = "borda";      // scf
  std::string index = "kendall";  // index
  std::string sampling = "exact";
  std::uint64_t seed = 0;
  std::size_t exact_cap = DecompositionScheme::kDefaultExactCap;
  unsigned threads = 1;
};

DsfMethod parse_method(std::string_view text);
std::string to_string(DsfMethod method);

/// Throws InputError for unknown grammar.
Dsf make_dsf(const DsfSpec& spec);

Dsf make_rank_variance_dsf();
Dsf make_navarrete_dsf(ScoringScheme scheme);
Dsf make_score_based_dsf(ScoringScheme scheme, DecompositionScheme decomposition = DecompositionScheme::exact_uniform());
Dsf make_scf_based_dsf(Scf rule, DecompositionScheme decomposition = DecompositionScheme::exact_uniform());
Dsf make_index_based_dsf(ProfileIndex index);

/// Every built-in DSF instance with symmetric parameters (exact mode).
std::vector<Dsf> shipped_dsfs();

}  // namespace divisive
