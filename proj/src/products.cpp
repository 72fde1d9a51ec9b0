#include "metacyclic/products.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

#include "metacyclic/combinatorics.hpp"
#include "metacyclic/residues.hpp"

namespace metacyclic {

namespace {

int mod(long long v, int n) {
  long long r = v % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

/// Number of multiplications used to walk every ordered selection of up to k
/// of `size` elements (one per tree edge), saturating at `cap + 1`.
std::uint64_t permutation_walk_cost(int size, int k, std::uint64_t cap) {
  std::uint64_t total = 0;
  std::uint64_t level = 1;
  for (int j = 1; j <= k; ++j) {
    const std::uint64_t factor = static_cast<std::uint64_t>(size - j + 1);
    if (level > (cap + 1) / factor) return cap + 1;
    level *= factor;
    total += level;
    if (total > cap) return cap + 1;
  }
  return total;
}

struct OracleWalk {
  const GroupParams& g;
  const std::vector<Element>& pool;
  int k;
  std::uint64_t found = 0;
  std::uint64_t used = 0;

  void walk(int depth, Element acc) {
    if (depth == k) {
      found |= std::uint64_t{1} << index_of(g, acc);
      return;
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (used & bit) continue;
      used |= bit;
      walk(depth + 1, multiply(g, acc, pool[i]));
      used &= ~bit;
    }
  }
};

}  // namespace

ProductSet product_set_oracle(const Subset& s, int k, std::uint64_t max_multiplications) {
  const int size = s.size();
  if (k < 0 || k > size)
    throw std::invalid_argument("product length " + std::to_string(k) + " exceeds subset size " +
                                std::to_string(size));
  if (permutation_walk_cost(size, k, max_multiplications) > max_multiplications)
    throw BudgetExceeded("permutation oracle for k = " + std::to_string(k) + " of " +
                         std::to_string(size) + " elements exceeds " +
                         std::to_string(max_multiplications) + " multiplications");
  const std::vector<Element> pool = s.elements();
  OracleWalk w{s.group(), pool, k};
  w.walk(0, kIdentity);
  return ProductSet(s.group(), k, w.found);
}

SignedProductSet signed_products(const GroupParams& g, std::span<const int> exps) {
  const int n = g.n();
  std::uint64_t reach = 1;  // the empty sum
  for (int e : exps) {
    const int r = mod(e, n);
    reach = residues::rotate(reach, r, n) | residues::rotate(reach, mod(-r, n), n);
  }
  return SignedProductSet{g, static_cast<int>(exps.size()), reach};
}

std::uint64_t y_product_residues(const GroupParams& g, std::span<const int> alphas, bool allow_inverses) {
  const int n = g.n();
  const int t = static_cast<int>(alphas.size());
  const int plus_terms = (t + 1) / 2;
  // by_plus[c]: residues reachable with c terms assigned a plus sign so far.
  std::vector<std::uint64_t> by_plus(plus_terms + 1, 0);
  by_plus[0] = 1;
  for (int a : alphas) {
    std::uint64_t plus_shift = residues::rotate(1, mod(a, n), n);
    if (allow_inverses) plus_shift |= residues::rotate(1, mod(static_cast<long long>(a) - g.m(), n), n);
    const std::uint64_t minus_shift = residues::negate(plus_shift, n);
    for (int c = plus_terms; c >= 0; --c) {
      std::uint64_t next = residues::sumset(minus_shift, by_plus[c], n);
      if (c > 0) next |= residues::sumset(plus_shift, by_plus[c - 1], n);
      by_plus[c] = next;
    }
  }
  return residues::translate(by_plus[plus_terms], static_cast<long long>(t / 2) * g.m(), n);
}

ProductSet y_products_fast(const GroupParams& g, std::span<const int> alphas, int t) {
  if (t != static_cast<int>(alphas.size()))
    throw std::invalid_argument("y_products_fast: t must equal the number of y-terms");
  return ProductSet::from_residues(g, t, y_product_residues(g, alphas), t % 2);
}

ProductSet ordered_products(const GroupParams& g, std::span<const int> betas, std::span<const int> alphas,
                            bool allow_inverses) {
  const int n = g.n();
  const int k = static_cast<int>(betas.size() + alphas.size());
  if (alphas.empty()) {
    if (allow_inverses) return signed_products(g, betas).as_product_set();
    long long sum = 0;
    for (int b : betas) sum += b;
    return ProductSet::from_residues(g, k, std::uint64_t{1} << mod(sum, n), 0);
  }
  const std::uint64_t x_part = signed_products(g, betas).residues;
  const std::uint64_t y_part = y_product_residues(g, alphas, allow_inverses);
  return ProductSet::from_residues(g, k, residues::sumset(x_part, y_part, n),
                                   static_cast<int>(alphas.size() % 2));
}

ProductSet mixed_products_fast(const Subset& s, int k) {
  if (k != s.size()) throw std::invalid_argument("mixed_products_fast: k must equal |S|");
  const auto betas = s.betas();
  const auto alphas = s.alphas();
  return ordered_products(s.group(), betas, alphas);
}

ProductSet product_set(const Subset& s, int k, const Context& ctx) {
  if (k < 0 || k > s.size())
    throw std::invalid_argument("product length " + std::to_string(k) + " exceeds subset size " +
                                std::to_string(s.size()));
  ProductSet out(s.group(), k);
  const GroupParams& g = s.group();
  for_each_submask_of_size(s.bits(), k, [&](std::uint64_t sub) {
    ctx.charge(1);
    out |= mixed_products_fast(Subset(g, sub), k);
    return true;
  });
  return out;
}

CosetProduct coset_product(const ProductSet& a, const ProductSet& b, int normal_size) {
  if (!(a.group() == b.group())) throw std::invalid_argument("coset_product: different groups");
  const GroupParams& g = a.group();
  ProductSet out(g, a.length() + b.length());
  for (Element u : a.members())
    for (Element v : b.members()) out.insert(multiply(g, u, v));
  const bool saturated = a.size() + b.size() >= normal_size + 1;
  if (saturated && out.size() != normal_size)
    throw std::logic_error("saturated coset product has " + std::to_string(out.size()) +
                           " members, expected " + std::to_string(normal_size) +
                           "; inputs are not contained in single cosets");
  return CosetProduct{out, saturated};
}

}  // namespace metacyclic
