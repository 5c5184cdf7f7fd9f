#pragma once

#include "divisive/profile.hpp"
#include "divisive/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace divisive {

enum class IndexKind { avg_kendall_tau, constant };

/// A profile index delta: whole profile -> number (diversity / polarisation reading).
class ProfileIndex {
 public:
  static ProfileIndex avg_kendall_tau();
  static ProfileIndex constant(Rational value);

  IndexKind kind() const noexcept { return kind_; }
  /// Declared invariance under proposal relabeling; spot-checked by tests, not proved.
  bool is_neutral() const noexcept { return true; }
  const Rational& constant_value() const noexcept { return value_; }

  /// "kendall" or "const:<rational>".
  std::string describe() const;

 private:
  ProfileIndex(IndexKind kind, Rational value) : kind_(kind), value_(std::move(value)) {}

  IndexKind kind_;
  Rational value_;
};

/// Number of unordered proposal pairs on which the two rankings disagree.
std::uint64_t kendall_tau(const Ranking& first, const Ranking& second);

/// Mean Kendall tau over unordered agent pairs; 0 for fewer than two agents.
Rational evaluate(const ProfileIndex& index, const SubProfile& profile);

ProfileIndex parse_profile_index(std::string_view text);

}  // namespace divisive
