#include "divisive/monte_carlo.hpp"

#include "divisive/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

namespace divisive {

std::vector<std::uint8_t> sample_bipartitions(std::size_t n, std::size_t samples, std::uint64_t seed) {
  std::vector<std::uint8_t> sides(n * samples, 1);
  if (n < 2) return sides;
  std::mt19937_64 rng(seed);
  const std::size_t others = n - 1;
  for (std::size_t s = 0; s < samples; ++s) {
    std::uint8_t* row = sides.data() + s * n;
    bool any_out = false;
    while (!any_out) {
      for (std::size_t base = 0; base < others; base += 64) {
        const std::size_t bits = std::min<std::size_t>(64, others - base);
        const std::uint64_t word = rng();
        for (std::size_t b = 0; b < bits; ++b) {
          const bool out = (word >> b) & 1U;
          row[1 + base + b] = out ? 0 : 1;
          any_out = any_out || out;
        }
      }
    }
  }
  return sides;
}

namespace {

// Row-major samples x proposals matrix of div values.
std::vector<double> evaluate_samples(const Profile& profile, const SideDiv& div, std::size_t samples,
                                     std::uint64_t seed, unsigned threads) {
  const auto n = profile.size();
  const auto m = profile.num_proposals();
  const auto sides = sample_bipartitions(n, samples, seed);
  std::vector<double> values(samples * m, 0.0);
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t s = lo; s < hi; ++s)
      div(std::span<const std::uint8_t>(sides.data() + s * n, n), std::span<double>(values.data() + s * m, m));
  };
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, samples);
  if (workers == 1) {
    work(0, samples);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back(work, samples * w / workers, samples * (w + 1) / workers);
  }
  return values;
}

// Mean and standard error of column f(s), summed in sample order.
template <class F>
Estimate summarize(std::size_t samples, F f) {
  double sum = 0.0;
  for (std::size_t s = 0; s < samples; ++s) sum += f(s);
  const double mean = sum / static_cast<double>(samples);
  double sq = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const double d = f(s) - mean;
    sq += d * d;
  }
  const double variance = samples > 1 ? sq / static_cast<double>(samples - 1) : 0.0;
  return {mean, std::sqrt(variance / static_cast<double>(samples))};
}

}  // namespace

MonteCarloRun run_monte_carlo(const Profile& profile, const SideDiv& div, std::size_t samples, std::uint64_t seed,
                              unsigned threads, double tie_z) {
  if (samples == 0) throw InputError("Monte Carlo estimation needs at least one sample");
  if (!(tie_z >= 0)) throw InputError("tie threshold must be nonnegative");
  const auto m = profile.num_proposals();
  MonteCarloRun run;
  run.estimates.assign(m, Estimate{});
  if (profile.size() < 2) {
    for (ProposalIndex x = 0; x < m; ++x) run.selection.push_back(x);
    return run;
  }

  const auto values = evaluate_samples(profile, div, samples, seed, threads);
  for (std::size_t x = 0; x < m; ++x)
    run.estimates[x] = summarize(samples, [&](std::size_t s) { return values[s * m + x]; });

  std::size_t leader = 0;
  for (std::size_t x = 1; x < m; ++x)
    if (run.estimates[x].mean > run.estimates[leader].mean) leader = x;
  for (std::size_t x = 0; x < m; ++x) {
    if (x == leader) {
      run.selection.push_back(x);
      continue;
    }
    const auto gap = summarize(samples, [&](std::size_t s) { return values[s * m + leader] - values[s * m + x]; });
    if (gap.mean <= tie_z * gap.std_error) run.selection.push_back(x);
  }
  return run;
}

std::vector<Estimate> estimate_monte_carlo(const Profile& profile, const SideDiv& div, std::size_t samples,
                                           std::uint64_t seed, unsigned threads) {
  if (samples == 0) throw InputError("Monte Carlo estimation needs at least one sample");
  const auto m = profile.num_proposals();
  std::vector<Estimate> out(m);
  if (profile.size() < 2) return out;
  const auto values = evaluate_samples(profile, div, samples, seed, threads);
  for (std::size_t x = 0; x < m; ++x) out[x] = summarize(samples, [&](std::size_t s) { return values[s * m + x]; });
  return out;
}

}  // namespace divisive
