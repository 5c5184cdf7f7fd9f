#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace divisive {

/// Largest electorate whose bipartitions fit a 64-bit coalition mask.
inline constexpr std::size_t kMaxMaskAgents = 63;

/// An unordered split {C, complement} of profile entries 0..n-1. Entry 0 is always on the C side;
/// bit i of `c_mask` says whether entry i is in C.
struct Bipartition {
  std::uint64_t c_mask = 1;
  std::size_t n = 0;

  bool in_c(std::size_t entry) const noexcept { return (c_mask >> entry) & 1U; }
  std::size_t c_size() const noexcept { return static_cast<std::size_t>(std::popcount(c_mask)); }
  std::size_t complement_size() const noexcept { return n - c_size(); }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// 2^(n-1) - 1: the number of splits with both sides nonempty. 0 for n < 2.
std::uint64_t bipartition_count(std::size_t n);

inline std::uint64_t gray_code(std::uint64_t i) noexcept { return i ^ (i >> 1); }

/// C-side mask for Gray index i: entry 0 plus entries j+1 for every set bit j of gray(i).
inline std::uint64_t gray_c_mask(std::uint64_t i) noexcept { return 1U | (gray_code(i) << 1); }

/// Walks Gray indices [first, last) of an n-entry electorate. `visit(c_mask, flipped, trivial)`
/// receives the entry whose side changed since the previous index (`npos` for the first index of
/// the range) and whether the split has an empty complement, which callers must not count.
template <typename Visitor>
void for_each_gray_bipartition(std::size_t n, std::uint64_t first, std::uint64_t last, Visitor&& visit) {
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  const std::uint64_t full = (n >= 2) ? (std::uint64_t{1} << (n - 1)) - 1 : 0;
  for (std::uint64_t i = first; i < last; ++i) {
    const std::size_t flipped = (i == first) ? npos : static_cast<std::size_t>(std::countr_zero(i)) + 1;
    visit(gray_c_mask(i), flipped, gray_code(i) == full);
  }
}

/// Deterministic list of all splits with both sides nonempty, in Gray order.
/// Throws CapacityError unless 2 <= n <= cap (and n <= kMaxMaskAgents).
std::vector<Bipartition> enumerate_bipartitions(std::size_t n, std::size_t cap = 20);

}  // namespace divisive
