#include "divisive/generators.hpp"

#include "divisive/errors.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <memory>
#include <numeric>
#include <random>
#include <thread>

namespace divisive {

GeneratorSpec GeneratorSpec::exhaustive(std::size_t max_m, std::size_t max_n) {
  GeneratorSpec spec;
  spec.max_m = max_m;
  spec.max_n = max_n;
  return spec;
}

GeneratorSpec GeneratorSpec::random(std::size_t count, std::uint64_t seed, std::size_t m, std::size_t n) {
  GeneratorSpec spec;
  spec.mode = Mode::random;
  spec.count = count;
  spec.seed = seed;
  spec.m = m;
  spec.n = n;
  return spec;
}

namespace {

// Smallest canonical form over all proposal relabelings.
bool is_neutral_representative(const std::vector<std::size_t>& chosen, const std::vector<Ranking>& rankings,
                               std::size_t m) {
  CanonicalForm mine;
  for (auto r : chosen) mine.emplace_back(rankings[r].order().begin(), rankings[r].order().end());
  std::vector<ProposalIndex> sigma(m);
  std::iota(sigma.begin(), sigma.end(), 0);
  while (std::next_permutation(sigma.begin(), sigma.end())) {
    CanonicalForm other;
    for (auto r : chosen) {
      const auto relabeled = rankings[r].relabeled(sigma);
      other.emplace_back(relabeled.order().begin(), relabeled.order().end());
    }
    std::sort(other.begin(), other.end());
    if (other < mine) return false;
  }
  return true;
}

bool exhaustive_scan(const GeneratorSpec& spec, const std::function<bool(const Profile&)>& visit) {
  for (std::size_t m = std::max<std::size_t>(1, spec.min_m); m <= spec.max_m; ++m) {
    const auto proposals = std::make_shared<const ProposalSet>(ProposalSet::letters(m));
    const auto rankings = all_rankings(m);
    const auto r = rankings.size();
    for (std::size_t n = std::max<std::size_t>(1, spec.min_n); n <= spec.max_n; ++n) {
      // Nondecreasing index sequences = multisets of rankings.
      std::vector<std::size_t> chosen(n, 0);
      while (true) {
        if (!spec.neutral_dedup || is_neutral_representative(chosen, rankings, m)) {
          std::vector<Entry> entries;
          entries.reserve(n);
          for (std::size_t i = 0; i < n; ++i) entries.push_back({i, rankings[chosen[i]]});
          if (!visit(Profile(proposals, std::move(entries)))) return false;
        }
        std::size_t i = n;
        while (i > 0 && chosen[i - 1] == r - 1) --i;
        if (i == 0) break;
        const auto next = chosen[i - 1] + 1;
        std::fill(chosen.begin() + static_cast<std::ptrdiff_t>(i - 1), chosen.end(), next);
      }
    }
  }
  return true;
}

void random_scan(const GeneratorSpec& spec, const std::function<bool(const Profile&)>& visit) {
  if (spec.m == 0 || spec.n == 0) throw InputError("random profiles need m >= 1 and n >= 1");
  const auto proposals = std::make_shared<const ProposalSet>(ProposalSet::letters(spec.m));
  std::mt19937_64 rng(spec.seed);
  std::vector<ProposalIndex> order(spec.m);
  for (std::size_t t = 0; t < spec.count; ++t) {
    std::vector<Entry> entries;
    entries.reserve(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) {
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      entries.push_back({i, Ranking(order)});
    }
    if (!visit(Profile(proposals, std::move(entries)))) return;
  }
}

}  // namespace

void for_each_profile(const GeneratorSpec& spec, const std::function<bool(const Profile&)>& visit) {
  if (spec.mode == GeneratorSpec::Mode::exhaustive)
    exhaustive_scan(spec, visit);
  else
    random_scan(spec, visit);
}

std::vector<Profile> generate_profiles(const GeneratorSpec& spec) {
  std::vector<Profile> out;
  for_each_profile(spec, [&](const Profile& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

SearchResult search_counterexample(const Dsf& dsf, AxiomId axiom, const GeneratorSpec& spec,
                                   const CheckOptions& options, unsigned threads) {
  constexpr std::size_t kBatch = 2048;
  threads = std::max(1U, threads);
  SearchResult result;
  std::vector<Profile> batch;
  std::size_t scanned = 0;

  // Returns false once a violation is recorded.
  auto flush = [&]() {
    std::vector<CheckOutcome> outcomes(batch.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto work = [&]() {
      for (std::size_t i = next++; i < batch.size(); i = next++) {
        try {
          outcomes[i] = check_axiom(dsf, axiom, batch[i], options);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
          return;
        }
      }
    };
    if (threads == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      ++result.checked;
      result.sampled = result.sampled || outcomes[i].sampled;
      if (outcomes[i].status == CheckStatus::pass) ++result.passed;
      if (outcomes[i].status == CheckStatus::inapplicable) ++result.inapplicable;
      if (outcomes[i].status == CheckStatus::violation) {
        result.violation = std::move(outcomes[i]);
        result.violation_index = scanned + i;
        return false;
      }
    }
    scanned += batch.size();
    batch.clear();
    return true;
  };

  bool open = true;
  for_each_profile(spec, [&](const Profile& p) {
    batch.push_back(p);
    if (batch.size() == kBatch) open = flush();
    return open;
  });
  if (open && !batch.empty()) flush();
  return result;
}

}  // namespace divisive
