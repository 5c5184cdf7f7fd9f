#include "divisive/bipartition.hpp"

#include "divisive/errors.hpp"

#include <string>

namespace divisive {

std::uint64_t bipartition_count(std::size_t n) {
  if (n < 2) return 0;
  if (n > kMaxMaskAgents + 1) throw CapacityError("electorate too large to count bipartitions");
  return (std::uint64_t{1} << (n - 1)) - 1;
}

std::vector<Bipartition> enumerate_bipartitions(std::size_t n, std::size_t cap) {
  if (n < 2 || n > cap || n > kMaxMaskAgents)
    throw CapacityError("cannot enumerate bipartitions of " + std::to_string(n) + " agents (cap " +
                        std::to_string(cap) + ")");
  std::vector<Bipartition> out;
  out.reserve(bipartition_count(n));
  struct Collect {
    std::vector<Bipartition>& out;
    std::size_t n;
    void operator()(std::uint64_t mask, std::size_t, bool trivial) {
      if (!trivial) out.push_back({mask, n});
    }
  };
  for_each_gray_bipartition(n, 0, std::uint64_t{1} << (n - 1), Collect{out, n});
  return out;
}

}  // namespace divisive
