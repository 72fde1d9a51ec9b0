#include "metacyclic/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace metacyclic {

namespace {
__extension__ using u128 = unsigned __int128;
}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  u128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t colex_unrank(std::uint64_t rank, int k, int width) {
  if (rank >= binomial(width, k)) throw std::out_of_range("colex rank out of range");
  std::uint64_t mask = 0;
  int c = width - 1;
  for (int i = k; i >= 1; --i) {
    while (binomial(c, i) > rank) --c;
    mask |= std::uint64_t{1} << c;
    rank -= binomial(c, i);
    --c;
  }
  return mask;
}

}  // namespace metacyclic
