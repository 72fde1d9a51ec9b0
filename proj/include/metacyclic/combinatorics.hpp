#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace metacyclic {

/// Exact C(n, k); throws std::overflow_error if it does not fit in 64 bits.
std::uint64_t binomial(int n, int k);

/// Next bitmask with the same popcount in increasing numeric (colex) order.
/// Returns 0 when the mask was the last one below 2^width.
inline std::uint64_t next_combination(std::uint64_t mask, int width) noexcept {
  const std::uint64_t low = mask & (~mask + 1);
  const std::uint64_t ripple = mask + low;
  if (ripple == 0) return 0;
  const std::uint64_t next = ripple | (((mask ^ ripple) >> 2) / low);
  if (width < 64 && (next >> width) != 0) return 0;
  return next;
}

inline std::uint64_t first_combination(int k) noexcept {
  return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
}

/// The k-subset of {0..width-1} with the given colex rank.
std::uint64_t colex_unrank(std::uint64_t rank, int k, int width);

/// Scatter the low bits of `compact` onto the set bits of `positions`
/// (bit i of compact goes to the i-th lowest set bit of positions).
inline std::uint64_t deposit(std::uint64_t compact, std::uint64_t positions) noexcept {
  std::uint64_t out = 0;
  while (compact != 0 && positions != 0) {
    const std::uint64_t lowest = positions & (~positions + 1);
    if (compact & 1u) out |= lowest;
    compact >>= 1;
    positions &= positions - 1;
  }
  return out;
}

/// Calls fn(sub) for every popcount-k submask of `set`, in increasing
/// numeric order. fn returns false to stop early; the return value reports
/// whether the iteration ran to completion.
template <class Fn>
bool for_each_submask_of_size(std::uint64_t set, int k, Fn&& fn) {
  const int size = std::popcount(set);
  if (k < 0 || k > size) return true;
  if (k == 0) return fn(std::uint64_t{0});
  for (std::uint64_t c = first_combination(k); c != 0; c = next_combination(c, size))
    if (!fn(deposit(c, set))) return false;
  return true;
}

}  // namespace metacyclic
