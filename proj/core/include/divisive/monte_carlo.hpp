#pragma once

#include "divisive/profile.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace divisive {

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;

  friend bool operator==(const Estimate&, const Estimate&) = default;
};

/// Per-decomposition divisiveness: given in_c[i] (1 when entry i is on the C side, both sides
/// nonempty), write div(x) for every proposal into `out`.
using SideDiv = std::function<void(std::span<const std::uint8_t> in_c, std::span<double> out)>;

/// Draws `samples` uniform splits with both sides nonempty (entry 0 pinned to C, complement a
/// uniform nonzero mask over the remaining entries) from a generator seeded with `seed`.
/// Returned row-major, one row of n side flags per sample.
std::vector<std::uint8_t> sample_bipartitions(std::size_t n, std::size_t samples, std::uint64_t seed);

/// Sample mean and standard error of `div` per proposal. The sample sequence is fixed by the seed
/// before evaluation, so the result does not depend on `threads`. Profiles with one agent have no
/// split and yield all-zero estimates.
std::vector<Estimate> estimate_monte_carlo(const Profile& profile, const SideDiv& div, std::size_t samples,
                                           std::uint64_t seed, unsigned threads = 1);

struct MonteCarloRun {
  std::vector<Estimate> estimates;
  /// Proposals not distinguishable from the highest estimate: the per-sample difference to the
  /// leader has mean within `tie_z` standard errors of 0. Sorted.
  std::vector<ProposalIndex> selection;
};

inline constexpr double kDefaultTieZ = 2.0;

/// estimate_monte_carlo plus a noise-aware max selection from the same samples.
MonteCarloRun run_monte_carlo(const Profile& profile, const SideDiv& div, std::size_t samples, std::uint64_t seed,
                              unsigned threads = 1, double tie_z = kDefaultTieZ);

}  // namespace divisive
