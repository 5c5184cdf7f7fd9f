#pragma once

// Brute-force reference implementations used as test oracles. They work on plain vectors
// and enumerate ordered subsets directly, sharing no code with the library beyond the
// Rational type.

#include <divisive/profile.hpp>
#include <divisive/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace oracle {

using divisive::Rational;
using Rankings = std::vector<std::vector<int>>;  // each ranking lists proposals best first

inline Rankings rankings_of(const divisive::SubProfile& p) {
  Rankings out;
  for (const auto& e : p.entries()) out.emplace_back(e.ranking.order().begin(), e.ranking.order().end());
  return out;
}

inline int pos(const std::vector<int>& ranking, int x) {
  for (std::size_t i = 0; i < ranking.size(); ++i)
    if (ranking[i] == x) return static_cast<int>(i) + 1;
  return -1;
}

enum class Kind { positional, normalized, copeland, copeland_asym };

struct Scoring {
  Kind kind = Kind::normalized;
  std::vector<Rational> weights;  // positional kinds
};

inline Rational score(const Scoring& s, const Rankings& sub, int x) {
  const int m = sub.empty() ? 0 : static_cast<int>(sub.front().size());
  if (s.kind == Kind::copeland || s.kind == Kind::copeland_asym) {
    Rational total = 0;
    for (int y = 0; y < m; ++y) {
      if (y == x) continue;
      int above = 0, below = 0;
      for (const auto& r : sub) (pos(r, x) < pos(r, y) ? above : below)++;
      if (above > below) total += 1;
      if (above < below && s.kind == Kind::copeland) total -= 1;
    }
    return total;
  }
  Rational total = 0;
  for (const auto& r : sub) total += s.weights[static_cast<std::size_t>(pos(r, x) - 1)];
  if (s.kind == Kind::normalized) total /= static_cast<long long>(sub.size());
  return total;
}

inline std::vector<int> winners(const std::vector<Rational>& weights, const Rankings& sub) {
  const int m = static_cast<int>(sub.front().size());
  std::vector<Rational> totals(static_cast<std::size_t>(m), 0);
  for (int x = 0; x < m; ++x)
    for (const auto& r : sub) totals[static_cast<std::size_t>(x)] += weights[static_cast<std::size_t>(pos(r, x) - 1)];
  const auto best = *std::max_element(totals.begin(), totals.end());
  std::vector<int> out;
  for (int x = 0; x < m; ++x)
    if (totals[static_cast<std::size_t>(x)] == best) out.push_back(x);
  return out;
}

inline Rational share(const std::vector<Rational>& weights, const Rankings& sub, int x) {
  const auto w = winners(weights, sub);
  if (std::find(w.begin(), w.end(), x) == w.end()) return 0;
  return Rational(1, static_cast<long long>(w.size()));
}

/// Mean over every ordered (C, complement) with both sides nonempty; each unordered split
/// appears twice, which leaves the mean unchanged.
inline std::vector<Rational> uniform_dsf(const Rankings& r, int m,
                                         const std::function<Rational(const Rankings&, const Rankings&, int)>& div) {
  const int n = static_cast<int>(r.size());
  std::vector<Rational> values(static_cast<std::size_t>(m), 0);
  if (n < 2) return values;
  long long count = 0;
  for (std::uint64_t s = 1; s + 1 < (std::uint64_t{1} << n); ++s) {
    Rankings c, d;
    for (int i = 0; i < n; ++i) ((s >> i) & 1U ? c : d).push_back(r[static_cast<std::size_t>(i)]);
    ++count;
    for (int x = 0; x < m; ++x) values[static_cast<std::size_t>(x)] += div(c, d, x);
  }
  for (auto& v : values) v /= count;
  return values;
}

inline std::vector<Rational> score_dsf(const Scoring& s, const Rankings& r, int m) {
  return uniform_dsf(r, m, [&](const Rankings& c, const Rankings& d, int x) { return abs(score(s, c, x) - score(s, d, x)); });
}

inline std::vector<Rational> scf_dsf(const std::vector<Rational>& weights, const Rankings& r, int m) {
  return uniform_dsf(r, m,
                     [&](const Rankings& c, const Rankings& d, int x) { return abs(share(weights, c, x) - share(weights, d, x)); });
}

inline std::vector<Rational> navarrete(const Scoring& s, const Rankings& r, int m) {
  std::vector<Rational> values(static_cast<std::size_t>(m), 0);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (y == x) continue;
      Rankings above, below;
      for (const auto& rk : r) (pos(rk, x) < pos(rk, y) ? above : below).push_back(rk);
      if (above.empty() || below.empty()) continue;
      values[static_cast<std::size_t>(x)] += abs(score(s, above, x) - score(s, below, x));
    }
    if (m > 1) values[static_cast<std::size_t>(x)] /= m - 1;
  }
  return values;
}

inline std::vector<Rational> rank_variance(const Rankings& r, int m) {
  std::vector<Rational> values;
  const auto n = static_cast<long long>(r.size());
  for (int x = 0; x < m; ++x) {
    Rational mean = 0;
    for (const auto& rk : r) mean += pos(rk, x);
    mean /= n;
    Rational var = 0;
    for (const auto& rk : r) var += (pos(rk, x) - mean) * (pos(rk, x) - mean);
    values.push_back(var / n);
  }
  return values;
}

inline int kendall(const std::vector<int>& a, const std::vector<int>& b) {
  const int m = static_cast<int>(a.size());
  int d = 0;
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y)
      if ((pos(a, x) < pos(a, y)) != (pos(b, x) < pos(b, y))) ++d;
  return d;
}

/// Average distance over unordered agent pairs; 0 below two agents.
inline Rational avg_kendall(const Rankings& r) {
  const auto n = r.size();
  if (n < 2) return 0;
  Rational total = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) total += kendall(r[i], r[j]);
  return total / static_cast<long long>(n * (n - 1) / 2);
}

inline Rankings lift(const Rankings& r, int x) {
  Rankings out;
  for (const auto& rk : r) {
    std::vector<int> next{x};
    for (int y : rk)
      if (y != x) next.push_back(y);
    out.push_back(next);
  }
  return out;
}

inline std::vector<Rational> index_kendall(const Rankings& r, int m) {
  std::vector<Rational> values;
  for (int x = 0; x < m; ++x) values.push_back(avg_kendall(lift(r, x)));
  return values;
}

inline std::vector<std::size_t> argmax(const std::vector<Rational>& v) {
  const auto best = *std::max_element(v.begin(), v.end());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == best) out.push_back(i);
  return out;
}

inline std::vector<std::size_t> argmin(const std::vector<Rational>& v) {
  const auto best = *std::min_element(v.begin(), v.end());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == best) out.push_back(i);
  return out;
}

inline std::vector<Rational> borda_weights(int m) {
  std::vector<Rational> w;
  for (int i = m - 1; i >= 0; --i) w.emplace_back(i);
  return w;
}

inline std::vector<Rational> plurality_weights(int m) {
  std::vector<Rational> w(static_cast<std::size_t>(m), 0);
  w[0] = 1;
  return w;
}

}  // namespace oracle
