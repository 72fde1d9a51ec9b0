#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metacyclic/context.hpp"
#include "metacyclic/group.hpp"

namespace metacyclic {

/// A sequence over H_{n,m} up to reordering: a multiplicity per canonical
/// element index.
class Sequence {
 public:
  Sequence(const GroupParams& g, std::vector<int> multiplicities);

  static Sequence from_elements(const GroupParams& g, std::span<const Element> elements);

  const GroupParams& group() const noexcept { return g_; }
  const std::vector<int>& multiplicities() const noexcept { return counts_; }
  int length() const noexcept { return length_; }
  int count(Element e) const noexcept;

  /// Expanded with repetition, in canonical index order.
  std::vector<Element> elements() const;

  /// "[x^0 (x2), x^1*y]" style listing.
  std::string to_string() const;

  bool operator==(const Sequence&) const = default;

 private:
  GroupParams g_;
  std::vector<int> counts_;
  int length_ = 0;
};

/// Incremental test for "some k of the terms seen so far admit an ordering
/// with product 1". Terms are added one copy at a time; the state records,
/// per number of terms used, the reachable exponents of x.
class ZeroProductTracker {
 public:
  ZeroProductTracker(const GroupParams& g, int k);

  void add(Element e);
  bool found() const noexcept;

 private:
  std::uint64_t& mixed(int used, int balance, int has_y) noexcept;

  int n_;
  int m_;
  int k_;
  std::vector<std::uint64_t> plain_;  // x-terms only, all contributing +beta
  std::vector<std::uint64_t> mixed_;  // at least one y-term possible; balance = #plus - #minus y-terms
};

/// Sub-multiset iteration over the size-k sub-multisets, each tested with the
/// structured product-set route. Throws std::invalid_argument if k > length.
bool sequence_has_zero_product(const Sequence& seq, int k, const Context& ctx = Context::defaults());

/// Same question answered by ZeroProductTracker.
bool has_zero_product_subsequence(const Sequence& seq, int k);

/// Independent check by brute force: every size-k sub-multiset, every
/// distinct ordering, multiplied left to right.
bool zero_product_by_permutations(const Sequence& seq, int k,
                                  std::uint64_t max_multiplications = 100'000'000);

struct EgzResult {
  int exp = 0;
  int k_max = 0;
  std::optional<int> value;         // nullopt: exceeds k_max
  std::optional<Sequence> witness;  // longest failing sequence found (length value-1, or k_max)
  std::uint64_t nodes = 0;          // search nodes visited
};

/// Smallest k >= exp(G), k <= k_max, such that every length-k sequence has a
/// zero-product subsequence of length exp(G).
EgzResult egz_bruteforce(const GroupParams& g, int k_max, const Context& ctx = Context::defaults());

/// Lexicographically first length-k multiplicity vector with no zero-product
/// subsequence of length exp(G), if any. Throws if k < exp(G).
std::optional<Sequence> egz_witness_lower(const GroupParams& g, int k, const Context& ctx = Context::defaults());

enum class ConjectureStatus { Confirmed, Refuted, NotApplicable };

std::string to_string(ConjectureStatus status);

/// Outcome of testing s(H_{n,m}) = 3n at one group.
struct ConjectureCheck {
  ConjectureStatus status = ConjectureStatus::NotApplicable;
  int predicted = 0;
  EgzResult result;
  /// When refuted, whether the permutation oracle confirms that the reported
  /// witness (length 3n if the value exceeds 3n, else length s - 1) has no
  /// zero-product subsequence.
  bool witness_verified = false;
};

/// The conjecture is stated for n >= 4 and m even (n even); other groups are
/// computed and reported as NotApplicable.
ConjectureCheck check_egz_conjecture(const GroupParams& g, const Context& ctx = Context::defaults());

}  // namespace metacyclic
