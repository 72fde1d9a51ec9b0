#include <random>

#include "doctest.h"
#include "metacyclic/egz.hpp"
#include "oracles.hpp"

using namespace metacyclic;

namespace {

Sequence repeated(const GroupParams& g, std::initializer_list<std::pair<Element, int>> parts) {
  std::vector<Element> elems;
  for (auto [e, c] : parts)
    for (int i = 0; i < c; ++i) elems.push_back(e);
  return Sequence::from_elements(g, elems);
}

}  // namespace

TEST_CASE("sequence basics") {
  const GroupParams g(3, 0);
  const Sequence s = repeated(g, {{{2, 0}, 3}, {{2, 1}, 1}});
  CHECK(s.length() == 4);
  CHECK(s.count({2, 0}) == 3);
  CHECK(s.count({0, 0}) == 0);
  CHECK(s.to_string() == "[x^2 (x3), x^2*y]");
  CHECK(s.elements().size() == 4);
  CHECK_THROWS_AS(Sequence(g, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Sequence(g, {0, 0, 0, -1, 0, 0}), std::invalid_argument);
}

TEST_CASE("zero-product examples") {
  const GroupParams g(3, 0);
  const Sequence powers = repeated(g, {{{1, 0}, 3}, {{2, 0}, 3}});
  CHECK(sequence_has_zero_product(powers, 6));
  CHECK(has_zero_product_subsequence(powers, 6));
  CHECK(zero_product_by_permutations(powers, 6));
  const Sequence ys = repeated(g, {{{0, 1}, 6}});
  CHECK(sequence_has_zero_product(ys, 6));
  CHECK(has_zero_product_subsequence(ys, 6));
  CHECK(zero_product_by_permutations(ys, 6));
  CHECK_THROWS_AS(sequence_has_zero_product(powers, 7), std::invalid_argument);
  CHECK_THROWS_AS(has_zero_product_subsequence(powers, 7), std::invalid_argument);
  CHECK_THROWS_AS(zero_product_by_permutations(powers, 7), std::invalid_argument);
  const Sequence two_x = repeated(g, {{{1, 0}, 2}});
  CHECK_FALSE(has_zero_product_subsequence(two_x, 2));
}

TEST_CASE("tracker, sub-multiset and permutation routes agree") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const GroupParams g(n, static_cast<int>(rng() % n));
    const int len = 1 + static_cast<int>(rng() % 9);
    std::vector<Element> elems;
    for (int i = 0; i < len; ++i) elems.push_back(element_from_index(g, static_cast<int>(rng() % g.order())));
    const Sequence s = Sequence::from_elements(g, elems);
    const int k = 1 + static_cast<int>(rng() % std::min(len, 6));
    const bool reference = oracle::multiset_has_zero_product(g, elems, k);
    CAPTURE(s.to_string());
    CAPTURE(k);
    CHECK(has_zero_product_subsequence(s, k) == reference);
    CHECK(sequence_has_zero_product(s, k) == reference);
    CHECK(zero_product_by_permutations(s, k) == reference);
  }
}

TEST_CASE("EGZ value of the dihedral group of order 6") {
  const GroupParams g(3, 0);
  const EgzResult r = egz_bruteforce(g, 9);
  REQUIRE(r.value);
  CHECK(*r.value == 9);
  CHECK(r.exp == 6);
  REQUIRE(r.witness);
  CHECK(r.witness->length() == 8);
  CHECK_FALSE(zero_product_by_permutations(*r.witness, 6));

  const auto w8 = egz_witness_lower(g, 8);
  REQUIRE(w8);
  CHECK_FALSE(zero_product_by_permutations(*w8, 6));
  CHECK_FALSE(egz_witness_lower(g, 9));
  CHECK_THROWS_AS(egz_witness_lower(g, 5), std::invalid_argument);
}

TEST_CASE("EGZ values match multiset enumeration") {
  for (auto [n, m] : {std::pair{2, 0}, {2, 1}, {4, 0}, {4, 2}}) {
    const GroupParams g(n, m);
    const EgzResult r = egz_bruteforce(g, 9);
    CAPTURE(n);
    CAPTURE(m);
    REQUIRE(r.value);
    CHECK(*r.value == oracle::egz_value(g, 9));
  }
  CHECK(*egz_bruteforce(GroupParams(2, 1), 8).value == 7);
  CHECK(*egz_bruteforce(GroupParams(2, 0), 8).value == 5);
}

TEST_CASE("the 3n conjecture at H_{4,2}") {
  const ConjectureCheck c = check_egz_conjecture(GroupParams(4, 2));
  CHECK(c.predicted == 12);
  CHECK(c.status == ConjectureStatus::Refuted);
  REQUIRE(c.result.value);
  CHECK(*c.result.value == 8);
  REQUIRE(c.result.witness);
  CHECK(c.result.witness->length() == 7);
  CHECK(c.witness_verified);
  CHECK(check_egz_conjecture(GroupParams(3, 0)).status == ConjectureStatus::NotApplicable);
  CHECK(to_string(ConjectureStatus::Confirmed) == "CONFIRMED");
  CHECK(to_string(ConjectureStatus::Refuted) == "REFUTED");
}

TEST_CASE("EGZ search limits") {
  CHECK_THROWS_AS(egz_bruteforce(GroupParams(6, 0), 18), BudgetExceeded);
  const Context tiny(20);
  CHECK_THROWS_AS(egz_bruteforce(GroupParams(3, 0), 9, tiny), BudgetExceeded);
  const Sequence big = repeated(GroupParams(4, 0), {{{1, 0}, 3}, {{1, 1}, 3}, {{2, 1}, 3}, {{3, 0}, 3}});
  CHECK_THROWS_AS(zero_product_by_permutations(big, 12, 5), BudgetExceeded);
}
