#pragma once

#include <cstdint>
#include <span>

#include "metacyclic/context.hpp"
#include "metacyclic/group.hpp"
#include "metacyclic/subset.hpp"

namespace metacyclic {

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

/// Pi_k(S) by brute force: every ordered selection of k distinct elements of
/// S, multiplied left to right. Throws std::invalid_argument if k > |S| and
/// BudgetExceeded if the enumeration would need more than
/// `max_multiplications` multiplications.
ProductSet product_set_oracle(const Subset& s, int k,
                              std::uint64_t max_multiplications = kDefaultOracleBudget);

/// { x^{+-e_1 +- ... +- e_s} } by a reachable-residue DP, one pass per term.
SignedProductSet signed_products(const GroupParams& g, std::span<const int> exps);

/// Residues r such that x^r y^{t mod 2} is a product of all the y-terms
/// {x^alpha_i y} in some order: the alternating sums with ceil(t/2) plus terms,
/// shifted by floor(t/2)*m. With `allow_inverses`, each term may also be used
/// as its inverse x^{alpha_i - m} y. `alphas` is a multiset.
std::uint64_t y_product_residues(const GroupParams& g, std::span<const int> alphas,
                                 bool allow_inverses = false);

/// Pi_t({x^alpha_1 y, ..., x^alpha_t y}); t must equal alphas.size().
ProductSet y_products_fast(const GroupParams& g, std::span<const int> alphas, int t);

/// Products of all terms x^beta_j and x^alpha_i y (multisets) in every order.
/// For t = 0 this is the single sum; for t >= 1 it is
/// Pi^{+-}(betas) * Pi_t(alphas), since a term placed after an odd number of
/// y-terms contributes with a flipped sign.
ProductSet ordered_products(const GroupParams& g, std::span<const int> betas,
                            std::span<const int> alphas, bool allow_inverses = false);

/// Pi_{|S|}(S) by the structured route; k must equal |S|.
ProductSet mixed_products_fast(const Subset& s, int k);

/// Pi_k(S) for any 0 <= k <= |S|: union of mixed_products_fast over the
/// k-subsets of S.
ProductSet product_set(const Subset& s, int k, const Context& ctx = Context::defaults());

struct CosetProduct {
  ProductSet product;
  bool saturated;  // |A| + |B| >= |N| + 1
};

/// Elementwise product A*B. When A and B each lie in one coset of a normal
/// subgroup of size `normal_size` and the sizes saturate, the product is a
/// whole coset (checked, throws std::logic_error otherwise).
CosetProduct coset_product(const ProductSet& a, const ProductSet& b, int normal_size);

}  // namespace metacyclic
