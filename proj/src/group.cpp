#include "metacyclic/group.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace metacyclic {

namespace {

int reduce(long long v, int n) noexcept {
  long long r = v % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

GroupParams::GroupParams(long long n, long long m) {
  if (n < 2) throw std::invalid_argument("H_{n,m} requires n >= 2, got n = " + std::to_string(n));
  if (n > (1 << 20)) throw std::invalid_argument("n is too large: " + std::to_string(n));
  n_ = static_cast<int>(n);
  m_ = reduce(m, n_);
}

GroupParams normalize_params(long long n, long long m) { return GroupParams(n, m); }

bool is_group(const GroupParams& g) noexcept { return (2 * g.m()) % g.n() == 0; }

Element make_element(const GroupParams& g, long long a, int eps) {
  if (eps != 0 && eps != 1) throw std::invalid_argument("power of y must be 0 or 1");
  return Element{reduce(a, g.n()), eps};
}

Element element_from_index(const GroupParams& g, int index) {
  if (index < 0 || index >= g.order())
    throw std::out_of_range("element index " + std::to_string(index) + " outside [0, 2n)");
  return Element{index % g.n(), index / g.n()};
}

bool is_valid(const GroupParams& g, Element e) noexcept {
  return e.a >= 0 && e.a < g.n() && (e.eps == 0 || e.eps == 1);
}

Element multiply(const GroupParams& g, Element u, Element v) noexcept {
  const int n = g.n();
  if (u.eps == 0) return Element{(u.a + v.a) % n, v.eps};
  // y x^b = x^{-b} y, and y y = x^m.
  int a = u.a - v.a + (v.eps == 1 ? g.m() : 0);
  return Element{reduce(a, n), 1 - v.eps};
}

Element inverse(const GroupParams& g, Element u) noexcept {
  if (u.eps == 0) return Element{reduce(-u.a, g.n()), 0};
  return Element{reduce(static_cast<long long>(u.a) - g.m(), g.n()), 1};
}

Element power(const GroupParams& g, Element u, long long k) noexcept {
  Element r = kIdentity;
  for (long long i = 0; i < k; ++i) r = multiply(g, r, u);
  return r;
}

int element_order(const GroupParams& g, Element u) noexcept {
  const int n = g.n();
  if (u.eps == 0) return n / std::gcd(n, u.a);  // gcd(n, 0) = n
  return 2 * n / std::gcd(n, g.m());
}

int exponent(const GroupParams& g) noexcept {
  return (g.n() % 2 == 0 && g.m() % 2 == 0) ? g.n() : 2 * g.n();
}

std::string to_string(Element e) {
  std::string s = "x^" + std::to_string(e.a);
  if (e.eps == 1) s += "*y";
  return s;
}

Element parse_element(const GroupParams& g, std::string_view text) {
  auto bad = [&] { return std::invalid_argument("malformed element '" + std::string(text) + "'"); };
  if (text == "1") return kIdentity;
  std::string_view rest = text;
  int eps = 0;
  if (rest.ends_with("y")) {
    eps = 1;
    rest.remove_suffix(1);
    if (rest.ends_with("*")) rest.remove_suffix(1);
    if (rest.empty()) return make_element(g, 0, 1);
  }
  if (rest == "x") return make_element(g, 1, eps);
  if (!rest.starts_with("x^") || rest.size() < 3) throw bad();
  rest.remove_prefix(2);
  long long a = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), a);
  if (ec != std::errc{} || ptr != rest.data() + rest.size()) throw bad();
  return make_element(g, a, eps);
}

}  // namespace metacyclic
