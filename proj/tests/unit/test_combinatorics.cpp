#include <bit>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "metacyclic/combinatorics.hpp"
#include "metacyclic/parallel.hpp"
#include "metacyclic/residues.hpp"

using namespace metacyclic;

TEST_CASE("binomial coefficients") {
  CHECK(binomial(8, 4) == 70);
  CHECK(binomial(12, 6) == 924);
  CHECK(binomial(16, 8) == 12870);
  CHECK(binomial(24, 12) == 2704156);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(64, 32) == 1832624140942590534ULL);
  for (int n = 1; n <= 40; ++n)
    for (int k = 1; k < n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  CHECK_THROWS_AS(binomial(70, 35), std::overflow_error);
}

TEST_CASE("colex enumeration visits every k-subset once in order") {
  for (int width = 1; width <= 12; ++width)
    for (int k = 1; k <= width; ++k) {
      std::uint64_t prev = 0;
      std::uint64_t count = 0;
      for (std::uint64_t m = first_combination(k); m != 0; m = next_combination(m, width)) {
        REQUIRE(std::popcount(m) == k);
        REQUIRE(m > prev);
        REQUIRE(m < (std::uint64_t{1} << width));
        CHECK(colex_unrank(count, k, width) == m);
        prev = m;
        ++count;
      }
      CHECK(count == binomial(width, k));
    }
}

TEST_CASE("submask iteration") {
  const std::uint64_t set = 0b1011010;
  std::set<std::uint64_t> seen;
  for_each_submask_of_size(set, 2, [&](std::uint64_t sub) {
    CHECK((sub & ~set) == 0);
    CHECK(std::popcount(sub) == 2);
    seen.insert(sub);
    return true;
  });
  CHECK(seen.size() == 6);
  int calls = 0;
  CHECK_FALSE(for_each_submask_of_size(set, 3, [&](std::uint64_t) { return ++calls < 2; }));
  CHECK(calls == 2);
  CHECK(deposit(0b101, 0b111000) == 0b101000);
}

TEST_CASE("parallel helpers are independent of the worker count") {
  auto sum = [](int workers) {
    return parallel_reduce(
        workers, 1000,
        [](std::uint64_t b, std::uint64_t e) {
          std::uint64_t s = 0;
          for (std::uint64_t i = b; i < e; ++i) s += i * i;
          return s;
        },
        std::uint64_t{0}, [](std::uint64_t a, std::uint64_t b) { return a + b; });
  };
  CHECK(sum(1) == 332833500);
  CHECK(sum(4) == 332833500);

  for (int workers : {1, 3, 8}) {
    CHECK(parallel_find_first(workers, 500, [](std::uint64_t i) { return i % 37 == 36; }) == 36);
    CHECK_FALSE(parallel_find_first(workers, 500, [](std::uint64_t) { return false; }));
    const auto hit = find_first_combination(workers, 10, 3, [](std::uint64_t m) { return (m >> 7) & 1u; });
    REQUIRE(hit);
    CHECK(*hit == 0b10000011);
    const auto total = reduce_combinations(
        workers, 10, 4, [](std::uint64_t) { return std::uint64_t{1}; }, std::uint64_t{0},
        [](std::uint64_t a, std::uint64_t b) { return a + b; });
    CHECK(total == 210);
  }
}

TEST_CASE("parallel_reduce rethrows the first error") {
  auto boom = [](std::uint64_t b, std::uint64_t) -> int {
    if (b >= 10) throw std::runtime_error("chunk");
    return 0;
  };
  CHECK_THROWS_AS(parallel_reduce(2, 100, boom, 0, [](int a, int) { return a; }), std::runtime_error);
}

TEST_CASE("residue sets") {
  namespace r = residues;
  CHECK(r::full(5) == 0b11111);
  CHECK(r::rotate(0b00011, 4, 5) == 0b10001);
  CHECK(r::translate(0b00001, -1, 5) == 0b10000);
  CHECK(r::negate(0b00110, 5) == 0b11000);
  CHECK(r::sumset(0b011, 0b011, 8) == 0b111);
  CHECK(r::sumset(0b10000001, 0b10, 8) == 0b11);
  CHECK(r::contains(0b100, 2));
}
