#include "metacyclic/subset.hpp"

#include <bit>
#include <stdexcept>

#include "metacyclic/residues.hpp"

namespace metacyclic {

namespace {

void require_bitset_size(const GroupParams& g) {
  if (g.n() > kMaxBitsetN)
    throw std::invalid_argument("subsets and product sets support n <= " + std::to_string(kMaxBitsetN));
}

std::uint64_t group_mask(const GroupParams& g) { return residues::full(g.order()); }

std::vector<Element> unpack(const GroupParams& g, std::uint64_t bits) {
  std::vector<Element> out;
  out.reserve(std::popcount(bits));
  while (bits != 0) {
    out.push_back(element_from_index(g, std::countr_zero(bits)));
    bits &= bits - 1;
  }
  return out;
}

std::vector<int> residue_list(std::uint64_t mask) {
  std::vector<int> out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

Subset::Subset(const GroupParams& g, std::uint64_t bits) : g_(g), bits_(bits) {
  require_bitset_size(g);
  if ((bits & ~group_mask(g)) != 0) throw std::invalid_argument("subset bits outside [0, 2n)");
}

Subset Subset::from_elements(const GroupParams& g, std::span<const Element> elements) {
  require_bitset_size(g);
  std::uint64_t bits = 0;
  for (Element e : elements) {
    if (!is_valid(g, e)) throw std::invalid_argument("element not in normal form: " + metacyclic::to_string(e));
    bits |= std::uint64_t{1} << index_of(g, e);
  }
  return Subset(g, bits);
}

Subset Subset::parse(const GroupParams& g, std::string_view text) {
  std::vector<Element> elems;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) elems.push_back(parse_element(g, item));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return from_elements(g, elems);
}

int Subset::size() const noexcept { return std::popcount(bits_); }
int Subset::x_count() const noexcept { return std::popcount(x_residues()); }
int Subset::y_count() const noexcept { return std::popcount(y_residues()); }
std::uint64_t Subset::x_residues() const noexcept { return bits_ & residues::full(g_.n()); }
std::uint64_t Subset::y_residues() const noexcept { return bits_ >> g_.n(); }
std::vector<int> Subset::betas() const { return residue_list(x_residues()); }
std::vector<int> Subset::alphas() const { return residue_list(y_residues()); }
std::vector<Element> Subset::elements() const { return unpack(g_, bits_); }

bool Subset::contains(Element e) const noexcept {
  return is_valid(g_, e) && ((bits_ >> index_of(g_, e)) & 1u);
}

Subset Subset::without(Element e) const {
  return Subset(g_, bits_ & ~(std::uint64_t{1} << index_of(g_, e)));
}

Subset Subset::with(Element e) const {
  return Subset(g_, bits_ | (std::uint64_t{1} << index_of(g_, e)));
}

std::string Subset::to_string() const {
  std::string s = "{";
  bool first = true;
  for (Element e : elements()) {
    if (!first) s += ", ";
    s += metacyclic::to_string(e);
    first = false;
  }
  return s + "}";
}

ProductSet::ProductSet(const GroupParams& g, int k, std::uint64_t bits) : g_(g), k_(k), bits_(bits) {
  require_bitset_size(g);
  if ((bits & ~group_mask(g)) != 0) throw std::invalid_argument("product set bits outside [0, 2n)");
}

ProductSet ProductSet::from_residues(const GroupParams& g, int k, std::uint64_t res, int eps) {
  return ProductSet(g, k, eps == 0 ? res : res << g.n());
}

int ProductSet::size() const noexcept { return std::popcount(bits_); }

bool ProductSet::contains(Element e) const noexcept {
  return is_valid(g_, e) && ((bits_ >> index_of(g_, e)) & 1u);
}

bool ProductSet::is_whole_group() const noexcept { return bits_ == group_mask(g_); }

void ProductSet::insert(Element e) {
  if (!is_valid(g_, e)) throw std::invalid_argument("element not in normal form");
  bits_ |= std::uint64_t{1} << index_of(g_, e);
}

ProductSet& ProductSet::operator|=(const ProductSet& other) {
  if (!(g_ == other.g_)) throw std::invalid_argument("product sets from different groups");
  bits_ |= other.bits_;
  return *this;
}

std::vector<Element> ProductSet::members() const { return unpack(g_, bits_); }

std::vector<std::string> ProductSet::to_strings() const {
  std::vector<std::string> out;
  for (Element e : members()) out.push_back(metacyclic::to_string(e));
  return out;
}

int SignedProductSet::size() const noexcept { return std::popcount(residues); }

}  // namespace metacyclic
