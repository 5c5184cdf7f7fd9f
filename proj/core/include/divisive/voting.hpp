#pragma once

#include "divisive/profile.hpp"
#include "divisive/rational.hpp"
#include "divisive/scoring.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace divisive {

/// A social choice function: nonempty subprofile -> nonempty set of winners, ties kept.
class Scf {
 public:
  using Procedure = std::function<std::vector<ProposalIndex>(const SubProfile&)>;

  /// Winners maximise the positional score. Throws InputError for Copeland schemes.
  static Scf positional_rule(ScoringScheme scheme);
  static Scf borda_rule();
  static Scf plurality_rule();
  /// Any procedure honouring the nonempty-winners contract.
  static Scf custom(std::string name, Procedure procedure);

  const std::string& name() const noexcept { return name_; }
  /// The scheme for positional rules, nullopt for custom procedures.
  const std::optional<ScoringScheme>& scheme() const noexcept { return scheme_; }

  std::vector<ProposalIndex> winners(const SubProfile& sub) const;

 private:
  Scf(std::string name, std::optional<ScoringScheme> scheme, Procedure procedure)
      : name_(std::move(name)), scheme_(std::move(scheme)), procedure_(std::move(procedure)) {}

  std::string name_;
  std::optional<ScoringScheme> scheme_;
  Procedure procedure_;
};

/// Sorted winner set. Throws EmptyCoalitionError on an empty subprofile.
std::vector<ProposalIndex> winners(const Scf& rule, const SubProfile& sub);

/// [x in F(sub)] / |F(sub)|; 0 for an empty subprofile.
Rational win_share(const Scf& rule, const SubProfile& sub, ProposalIndex x);

/// borda | plurality | vec:... | nvec:... (any positional scheme name is accepted).
Scf parse_scf(std::string_view text);

}  // namespace divisive
