#pragma once

// Slow reference implementations used only by the tests. They share no code
// with the library beyond the Element/GroupParams value types.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "metacyclic/group.hpp"

namespace oracle {

using metacyclic::Element;
using metacyclic::GroupParams;

inline int mod(long long v, int n) {
  const long long r = v % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

/// x^a1 y^e1 * x^a2 y^e2 by rewriting the word: y^e1 x^a2 = x^{(-1)^e1 a2} y^e1,
/// then y^2 = x^m.
inline Element mul(const GroupParams& g, Element u, Element v) {
  long long a = u.a + (u.eps == 1 ? -v.a : v.a);
  int e = u.eps + v.eps;
  if (e == 2) {
    a += g.m();
    e = 0;
  }
  return {mod(a, g.n()), e};
}

inline std::vector<Element> all_elements(const GroupParams& g) {
  std::vector<Element> out;
  for (int e = 0; e < 2; ++e)
    for (int a = 0; a < g.n(); ++a) out.push_back({a, e});
  return out;
}

inline Element product(const GroupParams& g, const std::vector<Element>& word) {
  Element acc{0, 0};
  for (Element e : word) acc = mul(g, acc, e);
  return acc;
}

inline int order(const GroupParams& g, Element u) {
  Element acc = u;
  int k = 1;
  while (!(acc.a == 0 && acc.eps == 0)) {
    acc = mul(g, acc, u);
    ++k;
  }
  return k;
}

inline int exponent(const GroupParams& g) {
  int l = 1;
  for (Element e : all_elements(g)) l = std::lcm(l, order(g, e));
  return l;
}

/// Every ordering of every k-subset of `elems` (distinct), as a sorted set of
/// (a, eps) pairs.
inline std::set<std::pair<int, int>> products(const GroupParams& g, const std::vector<Element>& elems, int k) {
  std::set<std::pair<int, int>> out;
  const int s = static_cast<int>(elems.size());
  std::vector<int> pick(s, 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    std::vector<int> idx;
    for (int i = 0; i < s; ++i)
      if (pick[i]) idx.push_back(i);
    do {
      std::vector<Element> word;
      for (int i : idx) word.push_back(elems[i]);
      const Element p = product(g, word);
      out.insert({p.a, p.eps});
    } while (std::next_permutation(idx.begin(), idx.end()));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

/// Same set as products(), memoized over the set of members used so far:
/// reach[used] holds every left-to-right product of exactly those members.
/// Needs 2n <= 64 and at most 20 members.
inline std::set<std::pair<int, int>> products_by_masks(const GroupParams& g, const std::vector<Element>& elems,
                                                       int k) {
  const int s = static_cast<int>(elems.size());
  const int n = g.n();
  std::vector<std::uint64_t> reach(std::size_t{1} << s, 0);
  reach[0] = 1;
  std::uint64_t found = 0;
  for (std::uint32_t used = 0; used < reach.size(); ++used) {
    const std::uint64_t here = reach[used];
    if (here == 0) continue;
    if (std::popcount(used) == k) {
      found |= here;
      continue;
    }
    for (int i = 0; i < s; ++i) {
      if (used >> i & 1u) continue;
      std::uint64_t next = 0;
      for (int idx = 0; idx < 2 * n; ++idx)
        if (here >> idx & 1u) {
          const Element p = mul(g, {idx % n, idx / n}, elems[i]);
          next |= std::uint64_t{1} << (p.a + n * p.eps);
        }
      reach[used | (1u << i)] |= next;
    }
  }
  std::set<std::pair<int, int>> out;
  for (int idx = 0; idx < 2 * n; ++idx)
    if (found >> idx & 1u) out.insert({idx % n, idx / n});
  return out;
}

/// Some k distinct members of `elems` multiply to 1 in some order.
inline bool has_identity_product(const GroupParams& g, const std::vector<Element>& elems, int k) {
  if (elems.size() > 7) return products_by_masks(g, elems, k).count({0, 0}) > 0;
  return products(g, elems, k).count({0, 0}) > 0;
}

/// First v (canonical order) with u*v = 1; u itself if there is none.
inline Element find_inverse(const GroupParams& g, Element u) {
  for (Element v : all_elements(g)) {
    const Element l = mul(g, u, v);
    if (l.a == 0 && l.eps == 0) return v;
  }
  return u;
}

/// { sum of +-e_j mod n } by enumerating all 2^s sign patterns.
inline std::set<int> signed_sums(int n, const std::vector<int>& exps) {
  std::set<int> out;
  const int s = static_cast<int>(exps.size());
  for (std::uint32_t signs = 0; signs < (1u << s); ++signs) {
    long long total = 0;
    for (int j = 0; j < s; ++j) total += (signs >> j & 1u) ? -exps[j] : exps[j];
    out.insert(mod(total, n));
  }
  return out;
}

/// Does the multiset `seq` contain k terms that multiply to 1 in some order?
inline bool multiset_has_zero_product(const GroupParams& g, std::vector<Element> seq, int k) {
  const int len = static_cast<int>(seq.size());
  std::sort(seq.begin(), seq.end());
  std::vector<int> pick(len, 0);
  std::fill(pick.end() - k, pick.end(), 1);
  std::set<std::vector<Element>> seen;
  do {
    std::vector<Element> sub;
    for (int i = 0; i < len; ++i)
      if (pick[i]) sub.push_back(seq[i]);
    if (!seen.insert(sub).second) continue;
    do {
      const Element p = product(g, sub);
      if (p.a == 0 && p.eps == 0) return true;
    } while (std::next_permutation(sub.begin(), sub.end()));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return false;
}

/// Calls fn(seq) for every multiset of size len over the group, as sorted
/// element lists. fn returns false to stop.
template <class Fn>
bool for_each_multiset(const GroupParams& g, int len, Fn&& fn) {
  const auto elems = all_elements(g);
  const int types = static_cast<int>(elems.size());
  std::vector<int> idx(len, 0);
  while (true) {
    std::vector<Element> seq;
    for (int i : idx) seq.push_back(elems[i]);
    if (!fn(seq)) return false;
    int pos = len - 1;
    while (pos >= 0 && idx[pos] == types - 1) --pos;
    if (pos < 0) return true;
    const int v = idx[pos] + 1;
    for (int i = pos; i < len; ++i) idx[i] = v;
  }
}

/// Brute-force EGZ value with the exp(G) zero-sum length, searched up to
/// k_max; 0 when it exceeds k_max.
inline int egz_value(const GroupParams& g, int k_max) {
  const int e = oracle::exponent(g);
  for (int k = e; k <= k_max; ++k) {
    const bool all = for_each_multiset(g, k, [&](const std::vector<Element>& seq) {
      return multiset_has_zero_product(g, seq, e);
    });
    if (all) return k;
  }
  return 0;
}

/// Harborth value by exhaustive subsets and orderings; small groups only.
inline int harborth_value(const GroupParams& g) {
  const auto elems = all_elements(g);
  const int order = static_cast<int>(elems.size());
  const int e = oracle::exponent(g);
  for (int k = e; k <= order; ++k) {
    bool all = true;
    for (std::uint32_t mask = 0; mask < (1u << order) && all; ++mask) {
      if (std::popcount(mask) != k) continue;
      std::vector<Element> s;
      for (int i = 0; i < order; ++i)
        if (mask >> i & 1u) s.push_back(elems[i]);
      all = has_identity_product(g, s, e);
    }
    if (all) return k;
  }
  return order + 1;
}

}  // namespace oracle
