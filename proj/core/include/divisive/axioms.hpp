#pragma once

#include "divisive/dsf.hpp"
#include "divisive/profile.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace divisive {

enum class AxiomId {
  anonymity,
  neutrality,
  uniformity,
  profile_unanimity,
  position_unanimity,
  weak_position_unanimity,
  uniform_reinforcement,
  clone_consistency,
  inversion_invariance,
  pareto_efficiency,
};

const std::vector<AxiomId>& all_axioms();
std::string to_string(AxiomId axiom);
/// Accepts the snake_case names and their hyphenated spellings.
AxiomId parse_axiom(std::string_view text);

struct CheckOptions {
  std::size_t anonymity_sweep_max_n = 6;   // all agent permutations up to this electorate size
  std::size_t neutrality_sweep_max_m = 5;  // all proposal permutations up to this many proposals
  std::size_t sampled_permutations = 200;  // otherwise
  std::size_t uniform_copies = 1;          // k for R ⊕ R^U
  std::uint64_t seed = 0;
};

enum class CheckStatus { pass, violation, inapplicable };
std::string to_string(CheckStatus status);

struct Witness {
  Profile profile;
  std::string details;
};

struct CheckOutcome {
  CheckStatus status = CheckStatus::pass;
  std::optional<Witness> witness;  // always set for violations
  bool sampled = false;            // a permutation sweep fell back to sampling
};

/// Instance-level check of one axiom on one profile.
CheckOutcome check_axiom(const Dsf& dsf, AxiomId axiom, const Profile& profile, const CheckOptions& options = {});

/// "{a, c}" in proposal order.
std::string format_selection(const ProposalSet& proposals, const std::vector<ProposalIndex>& selection);

}  // namespace divisive
