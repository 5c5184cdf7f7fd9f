#pragma once

#include <divisive/profile.hpp>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace testing_helpers {

/// Letters-only profile: {"abc", "acb"} -> agents 0, 1.
inline divisive::Profile letters_profile(const std::vector<std::string>& ballots) {
  const auto m = ballots.front().size();
  const auto names = divisive::ProposalSet::letters(m);
  std::vector<divisive::Ranking> rankings;
  for (const auto& b : ballots) {
    std::vector<divisive::ProposalIndex> order;
    for (char c : b) order.push_back(static_cast<divisive::ProposalIndex>(c - 'a'));
    rankings.emplace_back(std::move(order));
  }
  return divisive::Profile(names, rankings);
}

inline divisive::Profile random_profile(std::mt19937_64& rng, std::size_t m, std::size_t n) {
  std::vector<divisive::Ranking> rankings;
  std::vector<divisive::ProposalIndex> order(m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t x = 0; x < m; ++x) order[x] = x;
    std::shuffle(order.begin(), order.end(), rng);
    rankings.emplace_back(order);
  }
  return divisive::Profile(divisive::ProposalSet::letters(m), rankings);
}

inline std::vector<std::size_t> all_of(std::size_t m) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < m; ++x) out.push_back(x);
  return out;
}

}  // namespace testing_helpers
