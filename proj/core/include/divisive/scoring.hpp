#pragma once

#include "divisive/profile.hpp"
#include "divisive/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace divisive {

enum class ScoringKind {
  positional,
  normalized_positional,
  borda,
  normalized_borda,
  plurality,
  normalized_plurality,
  copeland_symmetric,
  copeland_asymmetric,
};

/// A scoring function s(R|C, x). Positional kinds are driven by a weight per position;
/// normalized kinds divide the positional sum by the coalition size.
class ScoringScheme {
 public:
  static ScoringScheme positional(std::vector<Rational> weights);
  static ScoringScheme normalized_positional(std::vector<Rational> weights);
  static ScoringScheme borda();
  static ScoringScheme normalized_borda();
  static ScoringScheme plurality();
  static ScoringScheme normalized_plurality();
  static ScoringScheme copeland_symmetric();
  static ScoringScheme copeland_asymmetric();

  /// Weights (m-1, ..., 1, epsilon). Agrees with Borda as a voting rule only while
  /// electorate_size * epsilon < 1; throws InputError otherwise or for epsilon <= 0.
  static ScoringScheme epsilon_borda(std::size_t m, const Rational& epsilon, std::size_t electorate_size,
                                     bool normalized = true);

  ScoringKind kind() const noexcept { return kind_; }
  bool is_positional() const noexcept;
  bool is_normalized() const noexcept;

  /// Resolved weight vector for m proposals. Throws InputError for Copeland kinds and for
  /// explicit vectors of the wrong length.
  std::vector<Rational> weights(std::size_t m) const;

  /// Grammar form: borda, nborda, plurality, nplurality, copeland, copeland-asym, vec:..., nvec:...
  std::string describe() const;

  friend bool operator==(const ScoringScheme&, const ScoringScheme&) = default;

 private:
  ScoringScheme(ScoringKind kind, std::vector<Rational> weights) : kind_(kind), weights_(std::move(weights)) {}

  ScoringKind kind_;
  std::vector<Rational> weights_;
};

/// Throws EmptyCoalitionError for an empty subprofile.
Rational score(const ScoringScheme& scheme, const SubProfile& sub, ProposalIndex x);

/// All proposals' scores at once.
std::vector<Rational> scores(const ScoringScheme& scheme, const SubProfile& sub);

ScoringScheme parse_scoring_scheme(std::string_view text);

}  // namespace divisive
