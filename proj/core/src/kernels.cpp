#include "kernels.hpp"

#include "divisive/bipartition.hpp"
#include "divisive/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <thread>
#include <unordered_map>

namespace divisive::detail {
namespace {

constexpr std::int64_t kMaxScaledWeight = std::int64_t{1} << 40;

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

struct ScaledWeights {
  std::vector<std::int64_t> weights;
  BigInt scale;  // common denominator L: weight_k = weights[k] / L
};

ScaledWeights scale_weights(const std::vector<Rational>& weights) {
  BigInt scale = 1;
  for (const auto& w : weights) scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(w));
  if (scale > kMaxScaledWeight) throw CapacityError("scoring vector denominators are too large for exact tallies");
  ScaledWeights out{{}, scale};
  for (const auto& w : weights) {
    const Rational scaled = w * scale;
    const BigInt& num = boost::multiprecision::numerator(scaled);
    if (abs(num) > kMaxScaledWeight) throw CapacityError("scoring vector weights are too large for exact tallies");
    out.weights.push_back(num.convert_to<std::int64_t>());
  }
  return out;
}

std::int64_t max_abs(const std::vector<std::int64_t>& v) {
  std::int64_t out = 0;
  for (auto x : v) out = std::max(out, abs64(x));
  return out;
}

// Tally coordinate x holds the (scaled) positional score of x.
class PositionalScoreKernel final : public DivKernel {
 public:
  PositionalScoreKernel(const ScoringScheme& scheme, std::size_t m)
      : m_(m), normalized_(scheme.is_normalized()), scaled_(scale_weights(scheme.weights(m))) {}

  std::size_t num_proposals() const override { return m_; }
  std::size_t dim() const override { return m_; }

  void features(const Ranking& ranking, std::span<std::int64_t> out) const override {
    for (std::size_t slot = 0; slot < m_; ++slot) out[ranking.at(slot)] = scaled_.weights[slot];
  }

  std::vector<std::size_t> projection(ProposalIndex x) const override { return {x}; }

  void numerators(std::size_t c, std::size_t n, std::span<const std::int64_t> tally_c,
                  std::span<const std::int64_t> tally_total, ProposalIndex only,
                  std::span<std::int64_t> out) const override {
    const auto d = static_cast<std::int64_t>(n - c);
    const auto cc = static_cast<std::int64_t>(c);
    auto one = [&](std::size_t x) {
      const std::int64_t sc = tally_c[x];
      const std::int64_t sd = tally_total[x] - sc;
      out[x] = normalized_ ? abs64(sc * d - sd * cc) : abs64(sc - sd);
    };
    if (only != kAllProposals) {
      one(only);
      return;
    }
    for (std::size_t x = 0; x < m_; ++x) one(x);
  }

  Rational denominator(std::size_t c, std::size_t n) const override {
    Rational out(scaled_.scale);
    if (normalized_) out *= Rational(static_cast<long long>(c) * static_cast<long long>(n - c));
    return out;
  }

  std::int64_t numerator_bound(std::size_t n) const override {
    const auto nn = static_cast<std::int64_t>(n);
    const auto w = max_abs(scaled_.weights);
    return normalized_ ? 2 * nn * nn * w : 2 * nn * w;
  }

 private:
  std::size_t m_;
  bool normalized_;
  ScaledWeights scaled_;
};

// Tally coordinate x*m + y counts agents ranking x above y.
class CopelandKernel final : public DivKernel {
 public:
  CopelandKernel(std::size_t m, bool symmetric) : m_(m), symmetric_(symmetric) {}

  std::size_t num_proposals() const override { return m_; }
  std::size_t dim() const override { return m_ * m_; }

  void features(const Ranking& ranking, std::span<std::int64_t> out) const override {
    std::fill(out.begin(), out.end(), 0);
    const auto order = ranking.order();
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = i + 1; j < m_; ++j) out[order[i] * m_ + order[j]] = 1;
  }

  std::vector<std::size_t> projection(ProposalIndex x) const override {
    std::vector<std::size_t> coords;
    for (std::size_t y = 0; y < m_; ++y)
      if (y != x) {
        coords.push_back(x * m_ + y);
        coords.push_back(y * m_ + x);
      }
    return coords;
  }

  void numerators(std::size_t, std::size_t, std::span<const std::int64_t> tally_c,
                  std::span<const std::int64_t> tally_total, ProposalIndex only,
                  std::span<std::int64_t> out) const override {
    auto one = [&](std::size_t x) {
      std::int64_t sc = 0, sd = 0;
      for (std::size_t y = 0; y < m_; ++y) {
        if (y == x) continue;
        const auto cxy = tally_c[x * m_ + y], cyx = tally_c[y * m_ + x];
        const auto dxy = tally_total[x * m_ + y] - cxy, dyx = tally_total[y * m_ + x] - cyx;
        sc += outcome(cxy, cyx);
        sd += outcome(dxy, dyx);
      }
      out[x] = abs64(sc - sd);
    };
    if (only != kAllProposals) {
      one(only);
      return;
    }
    for (std::size_t x = 0; x < m_; ++x) one(x);
  }

  Rational denominator(std::size_t, std::size_t) const override { return Rational(1); }
  std::int64_t numerator_bound(std::size_t) const override { return 2 * static_cast<std::int64_t>(m_); }

 private:
  std::int64_t outcome(std::int64_t for_x, std::int64_t against) const {
    if (for_x > against) return 1;
    if (symmetric_ && for_x < against) return -1;
    return 0;
  }

  std::size_t m_;
  bool symmetric_;
};

// div_F for a positional rule: winner sets of both sides from the score tallies.
class PositionalScfKernel final : public DivKernel {
 public:
  PositionalScfKernel(const ScoringScheme& scheme, std::size_t m)
      : m_(m), scaled_(scale_weights(scheme.weights(m))) {
    BigInt l = 1;
    for (std::size_t k = 2; k <= m; ++k) l = boost::multiprecision::lcm(l, BigInt(k));
    if (l > (std::int64_t{1} << 62)) throw CapacityError("too many proposals for exact win shares");
    share_unit_ = l.convert_to<std::int64_t>();
  }

  std::size_t num_proposals() const override { return m_; }
  std::size_t dim() const override { return m_; }

  void features(const Ranking& ranking, std::span<std::int64_t> out) const override {
    for (std::size_t slot = 0; slot < m_; ++slot) out[ranking.at(slot)] = scaled_.weights[slot];
  }

  std::vector<std::size_t> projection(ProposalIndex) const override { return {}; }

  void numerators(std::size_t, std::size_t, std::span<const std::int64_t> tally_c,
                  std::span<const std::int64_t> tally_total, ProposalIndex only,
                  std::span<std::int64_t> out) const override {
    std::int64_t best_c = tally_c[0], best_d = tally_total[0] - tally_c[0];
    for (std::size_t x = 1; x < m_; ++x) {
      best_c = std::max(best_c, tally_c[x]);
      best_d = std::max(best_d, tally_total[x] - tally_c[x]);
    }
    std::int64_t wins_c = 0, wins_d = 0;
    for (std::size_t x = 0; x < m_; ++x) {
      wins_c += tally_c[x] == best_c;
      wins_d += tally_total[x] - tally_c[x] == best_d;
    }
    const std::int64_t share_c = share_unit_ / wins_c, share_d = share_unit_ / wins_d;
    auto one = [&](std::size_t x) {
      const std::int64_t a = tally_c[x] == best_c ? share_c : 0;
      const std::int64_t b = tally_total[x] - tally_c[x] == best_d ? share_d : 0;
      out[x] = abs64(a - b);
    };
    if (only != kAllProposals) {
      one(only);
      return;
    }
    for (std::size_t x = 0; x < m_; ++x) one(x);
  }

  Rational denominator(std::size_t, std::size_t) const override { return Rational(share_unit_); }
  std::int64_t numerator_bound(std::size_t) const override { return share_unit_; }

 private:
  std::size_t m_;
  ScaledWeights scaled_;
  std::int64_t share_unit_ = 1;
};

std::vector<std::int64_t> feature_matrix(const Profile& profile, const DivKernel& kernel) {
  const auto dim = kernel.dim();
  std::vector<std::int64_t> feats(profile.size() * dim, 0);
  for (std::size_t i = 0; i < profile.size(); ++i)
    kernel.features(profile.entry(i).ranking, std::span<std::int64_t>(feats.data() + i * dim, dim));
  return feats;
}

std::vector<std::int64_t> column_sums(const std::vector<std::int64_t>& feats, std::size_t rows, std::size_t dim) {
  std::vector<std::int64_t> total(dim, 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t d = 0; d < dim; ++d) total[d] += feats[i * dim + d];
  return total;
}

void checked_add(Int128& acc, Int128 term) {
  if (__builtin_add_overflow(acc, term, &acc)) throw CapacityError("exact accumulator overflow");
}

std::vector<Rational> finish(const std::vector<Int128>& acc, std::size_t n, std::size_t m, const DivKernel& kernel,
                             const Rational& total_weight) {
  std::vector<Rational> values(m, Rational(0));
  for (std::size_t c = 1; c < n; ++c) {
    const Rational denom = kernel.denominator(c, n);
    for (std::size_t x = 0; x < m; ++x) {
      const auto a = acc[c * m + x];
      if (a != 0) values[x] += Rational(from_int128(a)) / denom;
    }
  }
  for (auto& v : values) v /= total_weight;
  return values;
}

}  // namespace

std::unique_ptr<DivKernel> make_score_kernel(const ScoringScheme& scheme, std::size_t m) {
  switch (scheme.kind()) {
    case ScoringKind::copeland_symmetric: return std::make_unique<CopelandKernel>(m, true);
    case ScoringKind::copeland_asymmetric: return std::make_unique<CopelandKernel>(m, false);
    default: return std::make_unique<PositionalScoreKernel>(scheme, m);
  }
}

std::unique_ptr<DivKernel> make_scf_kernel(const ScoringScheme& positional_scheme, std::size_t m) {
  return std::make_unique<PositionalScfKernel>(positional_scheme, m);
}

std::vector<Rational> gray_uniform_values(const Profile& profile, const DivKernel& kernel, unsigned threads) {
  const auto n = profile.size();
  const auto m = kernel.num_proposals();
  if (n < 2) return std::vector<Rational>(m, Rational(0));
  if (n > kMaxMaskAgents) throw CapacityError("electorate too large for bipartition enumeration");

  const auto dim = kernel.dim();
  const auto feats = feature_matrix(profile, kernel);
  const auto total = column_sums(feats, n, dim);
  const std::uint64_t range = std::uint64_t{1} << (n - 1);
  if (std::log2(static_cast<double>(range)) + std::log2(static_cast<double>(kernel.numerator_bound(n)) + 1) > 124)
    throw CapacityError("exact accumulator would overflow for this electorate");

  const std::size_t workers =
      std::clamp<std::size_t>(threads, 1, static_cast<std::size_t>(std::max<std::uint64_t>(1, range / 4096)));
  std::vector<std::vector<Int128>> partial(workers, std::vector<Int128>((n + 1) * m, 0));

  auto work = [&](std::size_t w) {
    const std::uint64_t lo = range * w / workers, hi = range * (w + 1) / workers;
    auto& acc = partial[w];
    std::vector<std::int64_t> tally(dim, 0), numer(m, 0);
    auto visit = [&](std::uint64_t c_mask, std::size_t flipped, bool trivial) {
      if (flipped == static_cast<std::size_t>(-1)) {
        std::fill(tally.begin(), tally.end(), 0);
        for (std::size_t i = 0; i < n; ++i)
          if ((c_mask >> i) & 1U)
            for (std::size_t d = 0; d < dim; ++d) tally[d] += feats[i * dim + d];
      } else {
        const std::int64_t sign = ((c_mask >> flipped) & 1U) ? 1 : -1;
        const std::int64_t* row = feats.data() + flipped * dim;
        for (std::size_t d = 0; d < dim; ++d) tally[d] += sign * row[d];
      }
      if (trivial) return;
      const auto c = static_cast<std::size_t>(std::popcount(c_mask));
      kernel.numerators(c, n, tally, total, kAllProposals, numer);
      Int128* slot = acc.data() + c * m;
      for (std::size_t x = 0; x < m; ++x) slot[x] += numer[x];
    };
    for_each_gray_bipartition(n, lo, hi, visit);
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  std::vector<Int128> acc((n + 1) * m, 0);
  for (const auto& p : partial)
    for (std::size_t i = 0; i < acc.size(); ++i) checked_add(acc[i], p[i]);
  return finish(acc, n, m, kernel, Rational(bipartition_count(n)));
}

std::vector<Rational> compressed_uniform_values(const Profile& profile, const DivKernel& kernel,
                                                std::size_t state_budget) {
  const auto n = profile.size();
  const auto m = kernel.num_proposals();
  if (n < 2) return std::vector<Rational>(m, Rational(0));
  if (n > kMaxMaskAgents) throw CapacityError("electorate too large for exact coalition counting");

  // Distinct rankings with multiplicities, in first-occurrence order.
  std::map<std::vector<ProposalIndex>, std::size_t> seen;
  std::vector<const Ranking*> group_ranking;
  std::vector<std::size_t> multiplicity;
  for (const auto& e : profile.entries()) {
    std::vector<ProposalIndex> key(e.ranking.order().begin(), e.ranking.order().end());
    auto [it, fresh] = seen.emplace(std::move(key), group_ranking.size());
    if (fresh) {
      group_ranking.push_back(&e.ranking);
      multiplicity.push_back(0);
    }
    ++multiplicity[it->second];
  }
  const auto groups = group_ranking.size();
  const auto dim = kernel.dim();
  std::vector<std::int64_t> feats(groups * dim, 0);
  for (std::size_t g = 0; g < groups; ++g)
    kernel.features(*group_ranking[g], std::span<std::int64_t>(feats.data() + g * dim, dim));
  std::vector<std::int64_t> total(dim, 0);
  for (std::size_t g = 0; g < groups; ++g)
    for (std::size_t d = 0; d < dim; ++d) total[d] += static_cast<std::int64_t>(multiplicity[g]) * feats[g * dim + d];

  std::vector<std::vector<std::uint64_t>> binom(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    binom[k].assign(k + 1, 1);
    for (std::size_t t = 1; t < k; ++t) binom[k][t] = binom[k - 1][t - 1] + binom[k - 1][t];
  }

  // One pass per proposal when the kernel can project, otherwise one joint pass.
  std::vector<std::pair<ProposalIndex, std::vector<std::size_t>>> passes;
  if (kernel.projection(0).empty()) {
    std::vector<std::size_t> all(dim);
    std::iota(all.begin(), all.end(), std::size_t{0});
    passes.emplace_back(kAllProposals, std::move(all));
  } else {
    for (ProposalIndex x = 0; x < m; ++x) passes.emplace_back(x, kernel.projection(x));
  }

  std::vector<Int128> acc((n + 1) * m, 0);
  for (const auto& [only, coords] : passes) {
    const auto p = coords.size();
    // Shift each coordinate to be non-negative, then pack (c, coords...) into one 64-bit key.
    std::vector<std::int64_t> offset(p, 0), field_max(p, 0);
    for (std::size_t k = 0; k < p; ++k) {
      for (std::size_t g = 0; g < groups; ++g) offset[k] = std::min(offset[k], feats[g * dim + coords[k]]);
      for (std::size_t g = 0; g < groups; ++g)
        field_max[k] += static_cast<std::int64_t>(multiplicity[g]) * (feats[g * dim + coords[k]] - offset[k]);
    }
    std::vector<unsigned> shift(p);
    unsigned bits = static_cast<unsigned>(std::bit_width(n));
    const std::uint64_t c_mask = (std::uint64_t{1} << bits) - 1;
    std::vector<std::uint64_t> field_mask(p);
    for (std::size_t k = 0; k < p; ++k) {
      const auto width = static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(field_max[k])));
      shift[k] = bits;
      field_mask[k] = width == 0 ? 0 : (std::uint64_t{1} << width) - 1;
      bits += width;
      if (bits > 64) throw CapacityError("coalition tallies do not fit the exact counting state");
    }
    std::vector<std::uint64_t> delta(groups, 1);
    for (std::size_t g = 0; g < groups; ++g)
      for (std::size_t k = 0; k < p; ++k)
        delta[g] += static_cast<std::uint64_t>(feats[g * dim + coords[k]] - offset[k]) << shift[k];

    std::unordered_map<std::uint64_t, std::uint64_t> states{{0, 1}};
    for (std::size_t g = 0; g < groups; ++g) {
      const auto k = multiplicity[g];
      std::unordered_map<std::uint64_t, std::uint64_t> next;
      next.reserve(states.size() * (k + 1));
      for (const auto& [key, count] : states)
        for (std::size_t t = 0; t <= k; ++t) next[key + t * delta[g]] += count * binom[k][t];
      if (next.size() > state_budget)
        throw CapacityError("exact coalition counting exceeds the state budget (" + std::to_string(state_budget) +
                            "); use Monte Carlo sampling");
      states.swap(next);
    }

    std::vector<std::int64_t> tally(dim, 0), numer(m, 0);
    for (const auto& [key, count] : states) {
      const auto c = static_cast<std::size_t>(key & c_mask);
      if (c == 0 || c == n) continue;
      for (std::size_t k = 0; k < p; ++k)
        tally[coords[k]] =
            static_cast<std::int64_t>((key >> shift[k]) & field_mask[k]) + static_cast<std::int64_t>(c) * offset[k];
      kernel.numerators(c, n, tally, total, only, numer);
      for (std::size_t x = 0; x < m; ++x) {
        if (only != kAllProposals && x != only) continue;
        Int128 term;
        if (__builtin_mul_overflow(static_cast<Int128>(count), static_cast<Int128>(numer[x]), &term))
          throw CapacityError("exact accumulator overflow");
        checked_add(acc[c * m + x], term);
      }
    }
  }
  // Every unordered split was counted once from each side.
  return finish(acc, n, m, kernel, Rational(2) * Rational(bipartition_count(n)));
}

SideDiv kernel_side_div(const Profile& profile, std::shared_ptr<const DivKernel> kernel) {
  const auto n = profile.size();
  const auto dim = kernel->dim();
  auto feats = std::make_shared<const std::vector<std::int64_t>>(feature_matrix(profile, *kernel));
  auto total = std::make_shared<const std::vector<std::int64_t>>(column_sums(*feats, n, dim));
  auto denoms = std::make_shared<std::vector<double>>(n + 1, 0.0);
  for (std::size_t c = 1; c < n; ++c) (*denoms)[c] = to_double(kernel->denominator(c, n));
  return [kernel, feats, total, denoms, n, dim](std::span<const std::uint8_t> in_c, std::span<double> out) {
    std::vector<std::int64_t> tally(dim, 0), numer(kernel->num_proposals(), 0);
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!in_c[i]) continue;
      ++c;
      for (std::size_t d = 0; d < dim; ++d) tally[d] += (*feats)[i * dim + d];
    }
    kernel->numerators(c, n, tally, *total, kAllProposals, numer);
    for (std::size_t x = 0; x < numer.size(); ++x) out[x] = static_cast<double>(numer[x]) / (*denoms)[c];
  };
}

}  // namespace divisive::detail
