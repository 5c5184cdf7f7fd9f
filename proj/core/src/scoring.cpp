#include "divisive/scoring.hpp"

#include "divisive/errors.hpp"

#include <sstream>

namespace divisive {

ScoringScheme ScoringScheme::positional(std::vector<Rational> weights) {
  if (weights.empty()) throw InputError("empty scoring vector");
  return {ScoringKind::positional, std::move(weights)};
}

ScoringScheme ScoringScheme::normalized_positional(std::vector<Rational> weights) {
  if (weights.empty()) throw InputError("empty scoring vector");
  return {ScoringKind::normalized_positional, std::move(weights)};
}

ScoringScheme ScoringScheme::borda() { return {ScoringKind::borda, {}}; }
ScoringScheme ScoringScheme::normalized_borda() { return {ScoringKind::normalized_borda, {}}; }
ScoringScheme ScoringScheme::plurality() { return {ScoringKind::plurality, {}}; }
ScoringScheme ScoringScheme::normalized_plurality() { return {ScoringKind::normalized_plurality, {}}; }
ScoringScheme ScoringScheme::copeland_symmetric() { return {ScoringKind::copeland_symmetric, {}}; }
ScoringScheme ScoringScheme::copeland_asymmetric() { return {ScoringKind::copeland_asymmetric, {}}; }

ScoringScheme ScoringScheme::epsilon_borda(std::size_t m, const Rational& epsilon, std::size_t electorate_size,
                                           bool normalized) {
  if (m < 2) throw InputError("epsilon-Borda needs at least two proposals");
  if (epsilon <= 0) throw InputError("epsilon must be positive");
  if (Rational(electorate_size) * epsilon >= 1)
    throw InputError("epsilon-Borda requires |N| * epsilon < 1 (got |N| = " + std::to_string(electorate_size) +
                     ", epsilon = " + to_string(epsilon) + ")");
  std::vector<Rational> w;
  for (std::size_t k = m - 1; k >= 1; --k) w.emplace_back(k);
  w.push_back(epsilon);
  return normalized ? normalized_positional(std::move(w)) : positional(std::move(w));
}

bool ScoringScheme::is_positional() const noexcept {
  return kind_ != ScoringKind::copeland_symmetric && kind_ != ScoringKind::copeland_asymmetric;
}

bool ScoringScheme::is_normalized() const noexcept {
  return kind_ == ScoringKind::normalized_positional || kind_ == ScoringKind::normalized_borda ||
         kind_ == ScoringKind::normalized_plurality;
}

std::vector<Rational> ScoringScheme::weights(std::size_t m) const {
  switch (kind_) {
    case ScoringKind::positional:
    case ScoringKind::normalized_positional:
      if (weights_.size() != m)
        throw InputError("scoring vector has " + std::to_string(weights_.size()) + " weights but there are " +
                         std::to_string(m) + " proposals");
      return weights_;
    case ScoringKind::borda:
    case ScoringKind::normalized_borda: {
      std::vector<Rational> w;
      for (std::size_t k = 0; k < m; ++k) w.emplace_back(m - 1 - k);
      return w;
    }
    case ScoringKind::plurality:
    case ScoringKind::normalized_plurality: {
      std::vector<Rational> w(m, Rational(0));
      w.at(0) = 1;
      return w;
    }
    case ScoringKind::copeland_symmetric:
    case ScoringKind::copeland_asymmetric:
      break;
  }
  throw InputError("Copeland scoring is not positional");
}

std::string ScoringScheme::describe() const {
  switch (kind_) {
    case ScoringKind::borda: return "borda";
    case ScoringKind::normalized_borda: return "nborda";
    case ScoringKind::plurality: return "plurality";
    case ScoringKind::normalized_plurality: return "nplurality";
    case ScoringKind::copeland_symmetric: return "copeland";
    case ScoringKind::copeland_asymmetric: return "copeland-asym";
    case ScoringKind::positional:
    case ScoringKind::normalized_positional: {
      std::ostringstream out;
      out << (kind_ == ScoringKind::positional ? "vec:" : "nvec:");
      for (std::size_t i = 0; i < weights_.size(); ++i) out << (i ? "," : "") << to_string(weights_[i]);
      return out.str();
    }
  }
  return "?";
}

namespace {

std::vector<Rational> copeland_scores(const SubProfile& sub, bool symmetric) {
  const auto m = sub.num_proposals();
  std::vector<std::vector<std::size_t>> beats(m, std::vector<std::size_t>(m, 0));
  for (const auto& e : sub.entries()) {
    const auto order = e.ranking.order();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) ++beats[order[i]][order[j]];
  }
  std::vector<Rational> out(m, Rational(0));
  for (std::size_t x = 0; x < m; ++x) {
    long long s = 0;
    for (std::size_t y = 0; y < m; ++y) {
      if (y == x) continue;
      if (beats[x][y] > beats[y][x]) ++s;
      else if (symmetric && beats[x][y] < beats[y][x]) --s;
    }
    out[x] = s;
  }
  return out;
}

}  // namespace

std::vector<Rational> scores(const ScoringScheme& scheme, const SubProfile& sub) {
  if (sub.empty()) throw EmptyCoalitionError("score of an empty coalition is undefined");
  const auto m = sub.num_proposals();
  if (!scheme.is_positional()) return copeland_scores(sub, scheme.kind() == ScoringKind::copeland_symmetric);
  const auto w = scheme.weights(m);
  std::vector<Rational> out(m, Rational(0));
  for (const auto& e : sub.entries())
    for (std::size_t slot = 0; slot < m; ++slot) out[e.ranking.at(slot)] += w[slot];
  if (scheme.is_normalized())
    for (auto& s : out) s /= static_cast<long long>(sub.size());
  return out;
}

Rational score(const ScoringScheme& scheme, const SubProfile& sub, ProposalIndex x) {
  if (x >= sub.num_proposals()) throw InputError("unknown proposal index " + std::to_string(x));
  return scores(scheme, sub)[x];
}

namespace {
std::vector<Rational> parse_weight_list(std::string_view list) {
  std::vector<Rational> out;
  while (true) {
    const auto comma = list.find(',');
    out.push_back(parse_rational(list.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}
}  // namespace

ScoringScheme parse_scoring_scheme(std::string_view text) {
  if (text == "borda") return ScoringScheme::borda();
  if (text == "nborda") return ScoringScheme::normalized_borda();
  if (text == "plurality") return ScoringScheme::plurality();
  if (text == "nplurality") return ScoringScheme::normalized_plurality();
  if (text == "copeland") return ScoringScheme::copeland_symmetric();
  if (text == "copeland-asym") return ScoringScheme::copeland_asymmetric();
  if (text.starts_with("vec:")) return ScoringScheme::positional(parse_weight_list(text.substr(4)));
  if (text.starts_with("nvec:")) return ScoringScheme::normalized_positional(parse_weight_list(text.substr(5)));
  throw InputError("unknown scoring scheme '" + std::string(text) + "'");
}

}  // namespace divisive
