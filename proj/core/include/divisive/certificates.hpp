#pragma once

#include "divisive/indices.hpp"
#include "divisive/profile.hpp"
#include "divisive/rational.hpp"

#include <string>
#include <vector>

namespace divisive {

/// One candidate value for Δ(R) on the witness profile and the constraints it breaks.
struct CandidateRecord {
  std::vector<ProposalIndex> selection;
  std::vector<std::string> violations;

  bool rejected() const noexcept { return !violations.empty(); }
};

/// Record of a finite impossibility argument. `complete` holds when every step checked out:
/// every candidate was rejected, or (for the index theorem) every required equality held.
struct Certificate {
  std::string theorem;
  std::vector<Profile> witnesses;
  std::vector<CandidateRecord> candidates;
  std::vector<std::string> facts;
  bool complete = false;

  std::size_t rejected_count() const;
};

/// Pareto Efficiency vs Weak Position Unanimity on {a≻b1≻…≻b(m-1), a≻b(m-1)≻…≻b1}, m >= 3.
Certificate verify_theorem_1(std::size_t m = 3);

/// Position Unanimity vs a neutral profile index, on `copies` agents each for a1≻…≻am and its
/// reverse; m odd and >= 3.
Certificate verify_theorem_2(std::size_t m = 3, std::size_t copies = 1,
                             const ProfileIndex& index = ProfileIndex::avg_kendall_tau());

/// Anonymity + Neutrality + Clone Consistency vs Position Unanimity on (abc, cba).
Certificate verify_theorem_3();

/// Inversion Invariance vs Pareto Efficiency on the 1-agent profile (a≻b).
Certificate verify_inversion_pareto_exclusion();

/// Every nonempty subset of {0..m-1}, ordered by bitmask.
std::vector<std::vector<ProposalIndex>> nonempty_subsets(std::size_t m);

}  // namespace divisive
