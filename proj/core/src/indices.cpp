#include "divisive/indices.hpp"

#include "divisive/errors.hpp"

namespace divisive {

ProfileIndex ProfileIndex::avg_kendall_tau() { return {IndexKind::avg_kendall_tau, Rational(0)}; }
ProfileIndex ProfileIndex::constant(Rational value) { return {IndexKind::constant, std::move(value)}; }

std::string ProfileIndex::describe() const {
  return kind_ == IndexKind::avg_kendall_tau ? "kendall" : "const:" + to_string(value_);
}

std::uint64_t kendall_tau(const Ranking& first, const Ranking& second) {
  if (first.size() != second.size()) throw InputError("Kendall tau needs rankings over the same proposals");
  const auto m = first.size();
  std::uint64_t discordant = 0;
  for (ProposalIndex x = 0; x < m; ++x)
    for (ProposalIndex y = x + 1; y < m; ++y)
      if (first.prefers(x, y) != second.prefers(x, y)) ++discordant;
  return discordant;
}

Rational evaluate(const ProfileIndex& index, const SubProfile& profile) {
  if (index.kind() == IndexKind::constant) return index.constant_value();
  const auto n = profile.size();
  if (n < 2) return Rational(0);
  // Summed over agent pairs, each proposal pair {x,y} contributes (#x>y) * (#y>x).
  const auto m = profile.num_proposals();
  std::vector<std::uint64_t> above(m * m, 0);
  for (const auto& e : profile.entries()) {
    const auto order = e.ranking.order();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) ++above[order[i] * m + order[j]];
  }
  BigInt total = 0;
  for (ProposalIndex x = 0; x < m; ++x)
    for (ProposalIndex y = x + 1; y < m; ++y) total += BigInt(above[x * m + y]) * above[y * m + x];
  const BigInt pairs = BigInt(n) * (n - 1) / 2;
  return Rational(total, pairs);
}

ProfileIndex parse_profile_index(std::string_view text) {
  if (text == "kendall") return ProfileIndex::avg_kendall_tau();
  if (text.starts_with("const:")) return ProfileIndex::constant(parse_rational(text.substr(6)));
  throw InputError("unknown profile index '" + std::string(text) + "'");
}

}  // namespace divisive
