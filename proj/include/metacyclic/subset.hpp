#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "metacyclic/group.hpp"

namespace metacyclic {

/// Largest n for which subsets and product sets fit the 2n-bit layout.
inline constexpr int kMaxBitsetN = 32;

/// A set of distinct elements of H_{n,m}; bit i is set iff the element with
/// canonical index i belongs to the set. Bits [0,n) form the x-part
/// {x^beta_j}, bits [n,2n) the y-part {x^alpha_i y}.
class Subset {
 public:
  Subset(const GroupParams& g, std::uint64_t bits);

  static Subset from_elements(const GroupParams& g, std::span<const Element> elements);
  static Subset parse(const GroupParams& g, std::string_view comma_separated);

  const GroupParams& group() const noexcept { return g_; }
  std::uint64_t bits() const noexcept { return bits_; }

  int size() const noexcept;
  int x_count() const noexcept;  // s
  int y_count() const noexcept;  // t

  /// Residue masks: bit beta set iff x^beta in S; bit alpha set iff x^alpha y in S.
  std::uint64_t x_residues() const noexcept;
  std::uint64_t y_residues() const noexcept;

  std::vector<int> betas() const;   // ascending
  std::vector<int> alphas() const;  // ascending
  std::vector<Element> elements() const;  // canonical index order

  bool contains(Element e) const noexcept;
  Subset without(Element e) const;
  Subset with(Element e) const;

  std::string to_string() const;  // "{x^0, x^1*y}"

  bool operator==(const Subset&) const = default;

 private:
  GroupParams g_;
  std::uint64_t bits_;
};

/// A set of elements with the same bit layout as Subset, tagged with the
/// product length k it was generated from (Pi_k(S)).
class ProductSet {
 public:
  ProductSet(const GroupParams& g, int k, std::uint64_t bits = 0);

  /// { x^r y^eps : r in residues }.
  static ProductSet from_residues(const GroupParams& g, int k, std::uint64_t residues, int eps);

  const GroupParams& group() const noexcept { return g_; }
  int length() const noexcept { return k_; }
  std::uint64_t bits() const noexcept { return bits_; }

  int size() const noexcept;
  bool empty() const noexcept { return bits_ == 0; }
  bool contains(Element e) const noexcept;
  bool contains_identity() const noexcept { return bits_ & 1u; }
  bool is_whole_group() const noexcept;

  void insert(Element e);
  ProductSet& operator|=(const ProductSet& other);

  std::vector<Element> members() const;  // canonical index order
  std::vector<std::string> to_strings() const;

  /// Same members (the product length is metadata and not compared).
  bool same_members(const ProductSet& other) const noexcept {
    return g_ == other.g_ && bits_ == other.bits_;
  }

 private:
  GroupParams g_;
  int k_;
  std::uint64_t bits_;
};

/// Pi^{+-}_s({x^beta_1, ..., x^beta_s}) = { x^{+-beta_1 +- ... +- beta_s} };
/// always inside <x>, so stored as a residue mask.
struct SignedProductSet {
  GroupParams group;
  int length = 0;
  std::uint64_t residues = 0;

  int size() const noexcept;
  bool contains_identity() const noexcept { return residues & 1u; }
  ProductSet as_product_set() const { return ProductSet::from_residues(group, length, residues, 0); }
};

}  // namespace metacyclic
