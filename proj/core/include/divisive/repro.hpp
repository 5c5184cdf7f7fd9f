#pragma once

#include "divisive/profile.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace divisive {

// Fixed profiles behind the repro fixtures.
Profile example1_profile();                          // abcd, bacd, abdc, badc
Profile example2_profile(std::size_t copies);        // `copies` agents each for abc and acb
Profile example3_profile();                          // axybc, bxyca, cxyab
Profile prop3_profile();                             // abcde, badce
Profile plurality_position_profile();                // abc, acb

struct ReproCheck {
  std::string what;
  std::string expected;
  std::string actual;

  bool pass() const { return expected == actual; }
};

struct ReproResult {
  std::string fixture;
  std::vector<ReproCheck> checks;

  bool passed() const;
  /// One line per check; mismatches show "- expected" / "+ actual" lines.
  std::string render() const;
};

/// ex1 ex2 ex3 prop3 plurality-pu thm1 thm2 thm3 inv-pareto
const std::vector<std::string>& fixture_names();

/// Throws InputError for unknown names.
ReproResult run_fixture(std::string_view name);

}  // namespace divisive
