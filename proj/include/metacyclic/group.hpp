#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace metacyclic {

/// Parameters of H_{n,m} = < x, y | x^n = 1, y^2 = x^m, yx = x^{-1}y >.
///
/// m only enters through x^m, so it is stored reduced into [0, n). For even n
/// the reduction preserves the parity of m; for odd n no result depends on it.
class GroupParams {
 public:
  GroupParams(long long n, long long m);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  int order() const noexcept { return 2 * n_; }

  bool operator==(const GroupParams&) const = default;

 private:
  int n_;
  int m_;
};

GroupParams normalize_params(long long n, long long m);

/// True when the defining relations are consistent with a group of order 2n:
/// y must commute with y^2 = x^m, which needs 2m = 0 mod n. Outside this case the
/// normal-form multiplication is not associative and products are evaluated
/// strictly left to right.
bool is_group(const GroupParams& g) noexcept;

/// Normal form x^a y^eps.
struct Element {
  int a = 0;
  int eps = 0;

  auto operator<=>(const Element&) const = default;
};

inline constexpr Element kIdentity{0, 0};

Element make_element(const GroupParams& g, long long a, int eps);

/// Canonical index a + n*eps; fixes the bit layout of every subset and product set.
inline int index_of(const GroupParams& g, Element e) noexcept { return e.a + g.n() * e.eps; }
Element element_from_index(const GroupParams& g, int index);

bool is_valid(const GroupParams& g, Element e) noexcept;

Element multiply(const GroupParams& g, Element u, Element v) noexcept;

/// The element v with v*u = 1. For x^a this is x^{-a}; for x^a y it is
/// x^{a-m} y, which is also a right inverse exactly when is_group(g).
Element inverse(const GroupParams& g, Element u) noexcept;

/// u^k evaluated left to right, k >= 0.
Element power(const GroupParams& g, Element u, long long k) noexcept;

/// Closed-form order: n/gcd(n,a) for x^a, 2n/gcd(n,m) for x^a y.
int element_order(const GroupParams& g, Element u) noexcept;

/// n when n and m are both even, otherwise 2n.
int exponent(const GroupParams& g) noexcept;

/// "x^a" or "x^a*y".
std::string to_string(Element e);

/// Accepts "1", "x", "x^a", "y", "xy", "x*y", "x^ay" and "x^a*y"; a may be
/// negative and is reduced mod n.
Element parse_element(const GroupParams& g, std::string_view text);

}  // namespace metacyclic
