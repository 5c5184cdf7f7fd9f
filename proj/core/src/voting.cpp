#include "divisive/voting.hpp"

#include "divisive/errors.hpp"

#include <algorithm>

namespace divisive {

Scf Scf::positional_rule(ScoringScheme scheme) {
  if (!scheme.is_positional())
    throw InputError("only positional scoring schemes induce a built-in SCF (got '" + scheme.describe() + "')");
  std::string name = scheme.describe() + "-rule";
  auto procedure = [scheme](const SubProfile& sub) {
    const auto totals = scores(scheme, sub);
    const auto best = *std::max_element(totals.begin(), totals.end());
    std::vector<ProposalIndex> out;
    for (ProposalIndex x = 0; x < totals.size(); ++x)
      if (totals[x] == best) out.push_back(x);
    return out;
  };
  return Scf(std::move(name), std::move(scheme), std::move(procedure));
}

Scf Scf::borda_rule() { return positional_rule(ScoringScheme::borda()); }
Scf Scf::plurality_rule() { return positional_rule(ScoringScheme::plurality()); }

Scf Scf::custom(std::string name, Procedure procedure) {
  if (!procedure) throw InputError("custom SCF needs a procedure");
  return Scf(std::move(name), std::nullopt, std::move(procedure));
}

std::vector<ProposalIndex> Scf::winners(const SubProfile& sub) const {
  if (sub.empty()) throw EmptyCoalitionError("winners of an empty coalition are undefined");
  auto out = procedure_(sub);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw Error("SCF '" + name_ + "' returned no winner");
  if (out.back() >= sub.num_proposals()) throw Error("SCF '" + name_ + "' returned an unknown proposal");
  return out;
}

std::vector<ProposalIndex> winners(const Scf& rule, const SubProfile& sub) { return rule.winners(sub); }

Rational win_share(const Scf& rule, const SubProfile& sub, ProposalIndex x) {
  if (x >= sub.num_proposals()) throw InputError("unknown proposal index " + std::to_string(x));
  if (sub.empty()) return Rational(0);
  const auto w = rule.winners(sub);
  if (!std::binary_search(w.begin(), w.end(), x)) return Rational(0);
  return Rational(1, static_cast<long long>(w.size()));
}

Scf parse_scf(std::string_view text) {
  if (text == "borda") return Scf::borda_rule();
  if (text == "plurality") return Scf::plurality_rule();
  return Scf::positional_rule(parse_scoring_scheme(text));
}

}  // namespace divisive
