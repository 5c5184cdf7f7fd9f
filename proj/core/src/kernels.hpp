#pragma once

// Exact and sampled evaluation of uniform-decomposition DSFs.
//
// A kernel describes how one split {C, D} contributes to each proposal's divisiveness, in a form
// every engine can share: each ranking maps to an integer feature vector, a coalition's tally is
// the sum of its members' features, and div(x) for a split equals numerator / denominator(|C|)
// where the numerator is an integer computed from the C tally and the electorate total.

#include "divisive/monte_carlo.hpp"
#include "divisive/profile.hpp"
#include "divisive/rational.hpp"
#include "divisive/scoring.hpp"
#include "divisive/voting.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace divisive::detail {

inline constexpr ProposalIndex kAllProposals = static_cast<ProposalIndex>(-1);

class DivKernel {
 public:
  virtual ~DivKernel() = default;

  virtual std::size_t num_proposals() const = 0;
  virtual std::size_t dim() const = 0;
  virtual void features(const Ranking& ranking, std::span<std::int64_t> out) const = 0;
  /// Tally coordinates div(x) reads, or empty when x needs the whole tally.
  virtual std::vector<std::size_t> projection(ProposalIndex x) const = 0;
  /// Writes |div| numerators for `only` (or every proposal when kAllProposals). c and n - c are >= 1.
  virtual void numerators(std::size_t c, std::size_t n, std::span<const std::int64_t> tally_c,
                          std::span<const std::int64_t> tally_total, ProposalIndex only,
                          std::span<std::int64_t> out) const = 0;
  virtual Rational denominator(std::size_t c, std::size_t n) const = 0;
  /// Upper bound on any single numerator for an n-agent electorate.
  virtual std::int64_t numerator_bound(std::size_t n) const = 0;
};

/// div_s for a scoring scheme (positional, normalized positional or Copeland).
std::unique_ptr<DivKernel> make_score_kernel(const ScoringScheme& scheme, std::size_t m);

/// div_F for a positional SCF.
std::unique_ptr<DivKernel> make_scf_kernel(const ScoringScheme& positional_scheme, std::size_t m);

/// Gray-code enumeration of all 2^(n-1) - 1 splits; mean div per proposal.
std::vector<Rational> gray_uniform_values(const Profile& profile, const DivKernel& kernel, unsigned threads);

/// Same quantity via a dynamic program over distinct rankings: counts coalitions per tally
/// (projected per proposal where the kernel allows it). Throws CapacityError past `state_budget`.
std::vector<Rational> compressed_uniform_values(const Profile& profile, const DivKernel& kernel,
                                                std::size_t state_budget);

/// Adapter for the Monte Carlo estimator.
SideDiv kernel_side_div(const Profile& profile, std::shared_ptr<const DivKernel> kernel);

}  // namespace divisive::detail
