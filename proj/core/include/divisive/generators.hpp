#pragma once

#include "divisive/axioms.hpp"
#include "divisive/dsf.hpp"
#include "divisive/profile.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace divisive {

/// Profile source for counterexample search.
///
/// Exhaustive mode yields every multiset of n rankings over m letters, once per
/// anonymity class, for m in [min_m, max_m] and n in [min_n, max_n], ordered by (m, n) and
/// then lexicographically. `neutral_dedup` additionally keeps one profile per relabeling
/// class, which is only sound for neutral DSFs.
/// Random mode draws `count` profiles of n uniform rankings over m letters from `seed`.
struct GeneratorSpec {
  enum class Mode { exhaustive, random };

  Mode mode = Mode::exhaustive;
  std::size_t min_m = 1, max_m = 3;
  std::size_t min_n = 1, max_n = 3;
  bool neutral_dedup = false;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::size_t m = 3, n = 3;

  static GeneratorSpec exhaustive(std::size_t max_m, std::size_t max_n);
  static GeneratorSpec random(std::size_t count, std::uint64_t seed, std::size_t m, std::size_t n);
};

/// Streams profiles in scan order; the visitor returns false to stop early.
void for_each_profile(const GeneratorSpec& spec, const std::function<bool(const Profile&)>& visit);

std::vector<Profile> generate_profiles(const GeneratorSpec& spec);

struct SearchResult {
  std::optional<CheckOutcome> violation;
  std::size_t violation_index = 0;  // position in scan order
  std::size_t checked = 0;          // profiles examined up to and including the violation
  std::size_t passed = 0;
  std::size_t inapplicable = 0;
  bool sampled = false;

  bool exhausted() const noexcept { return !violation.has_value(); }
};

/// Checks every generated profile and reports the violation earliest in scan order.
/// Workers split each batch; the result does not depend on `threads`.
SearchResult search_counterexample(const Dsf& dsf, AxiomId axiom, const GeneratorSpec& spec,
                                   const CheckOptions& options = {}, unsigned threads = 1);

}  // namespace divisive
