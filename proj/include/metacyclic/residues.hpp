#pragma once

#include <bit>
#include <cstdint>

// Sets of residues mod n (n <= 64) packed into one word, bit r <=> residue r.
namespace metacyclic::residues {

inline constexpr std::uint64_t full(int n) noexcept {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// { r + shift mod n : r in set }, shift in [0, n).
inline constexpr std::uint64_t rotate(std::uint64_t set, int shift, int n) noexcept {
  if (shift == 0) return set;
  return ((set << shift) | (set >> (n - shift))) & full(n);
}

/// shift may be any integer.
inline constexpr std::uint64_t translate(std::uint64_t set, long long shift, int n) noexcept {
  long long s = shift % n;
  if (s < 0) s += n;
  return rotate(set, static_cast<int>(s), n);
}

inline constexpr std::uint64_t negate(std::uint64_t set, int n) noexcept {
  std::uint64_t out = set & 1u;
  for (int r = 1; r < n; ++r)
    if ((set >> r) & 1u) out |= std::uint64_t{1} << (n - r);
  return out;
}

/// Minkowski sum A + B mod n.
inline constexpr std::uint64_t sumset(std::uint64_t a, std::uint64_t b, int n) noexcept {
  std::uint64_t out = 0;
  while (a != 0) {
    int r = std::countr_zero(a);
    a &= a - 1;
    out |= rotate(b, r, n);
  }
  return out;
}

inline constexpr bool contains(std::uint64_t set, int r) noexcept { return (set >> r) & 1u; }

}  // namespace metacyclic::residues
