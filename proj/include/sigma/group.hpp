#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sigma/bitset.hpp"
#include "sigma/permutation.hpp"
#include "sigma/primes.hpp"

namespace sigma {

using Element = std::uint32_t;

/// Default cap on the order of any materialized group.
inline constexpr std::size_t kDefaultOrderCap = 200;

/// A finite group stored as a full multiplication table.
///
/// Element 0 is the identity. Each element keeps the permutation it came
/// from so groups can be printed and re-exported as generator lists.
/// Instances are immutable after construction.
class CayleyGroup {
 public:
  CayleyGroup() = default;

  /// Builds a group from a row-major order x order table. Throws if element
  /// 0 is not a two-sided identity or a row/column is not a permutation.
  /// Associativity is not checked here (see is_associative).
  static CayleyGroup from_table(std::string name, std::size_t order, std::vector<Element> table,
                                std::vector<Permutation> element_perms,
                                std::vector<Element> generators);

  std::size_t order() const noexcept { return order_; }
  const std::string& name() const noexcept { return name_; }
  Element identity() const noexcept { return 0; }

  Element mul(Element a, Element b) const noexcept { return table_[a * order_ + b]; }
  Element inverse(Element a) const noexcept { return inverse_[a]; }
  // g^-1 x g
  Element conjugate(Element x, Element g) const noexcept { return mul(mul(inverse_[g], x), g); }
  std::size_t element_order(Element a) const;

  const Permutation& perm(Element a) const { return element_perms_[a]; }
  const std::vector<Element>& generators() const noexcept { return generators_; }
  const PrimeFactorization& factorization() const noexcept { return factorization_; }
  // pi(G), ascending.
  std::vector<std::uint64_t> primes() const;

  bool is_abelian() const;

  ElementSet empty_set() const { return ElementSet(order_); }
  ElementSet trivial() const;
  ElementSet all() const;
  ElementSet set_of(std::span<const Element> elements) const;

 private:
  std::string name_;
  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<Permutation> element_perms_;
  std::vector<Element> generators_;
  PrimeFactorization factorization_;
};

/// Breadth-first closure of the generators under right multiplication.
/// Elements are indexed in discovery order with the identity first. An empty
/// generator list gives the trivial group on `degree` points (degree 1 if 0).
/// Throws CapExceeded (with the partial count) once the closure passes
/// order_cap.
CayleyGroup group_from_generators(std::span<const Permutation> gens, std::size_t order_cap,
                                  std::string name = "", std::size_t degree = 0);

/// Componentwise product; element (g, h) has index g * |H| + h.
CayleyGroup direct_product(const CayleyGroup& g, const CayleyGroup& h,
                           std::size_t order_cap = kDefaultOrderCap);

struct Quotient {
  CayleyGroup group;
  // element of G -> coset index in `group`
  std::vector<Element> projection;
};

/// G/N for a normal subgroup N. Cosets are numbered in order of their
/// smallest element; elements act on cosets by right multiplication.
Quotient quotient_group(const CayleyGroup& g, const ElementSet& n);

struct SubgroupGroup {
  CayleyGroup group;
  // element of the subgroup -> element of the parent
  std::vector<Element> embedding;
};

/// The subgroup H as a standalone group, elements in ascending parent order.
SubgroupGroup subgroup_as_group(const CayleyGroup& g, const ElementSet& h);

// --- subset algebra -----------------------------------------------------

ElementSet product_set(const CayleyGroup& g, const ElementSet& a, const ElementSet& b);
bool is_permutable(const CayleyGroup& g, const ElementSet& a, const ElementSet& b);

bool is_subgroup(const CayleyGroup& g, const ElementSet& s);
ElementSet generated_subgroup(const CayleyGroup& g, const ElementSet& seed);
ElementSet cyclic_subgroup(const CayleyGroup& g, Element x);

/// Extends the subgroup `base` (generated by `gens`) by `x` in place using
/// coset enumeration; `gens` gains x. Returns false if x was already in base.
bool extend_subgroup(const CayleyGroup& g, ElementSet& base, std::vector<Element>& gens, Element x);

/// A small generating set for the subgroup h, chosen greedily in element order.
std::vector<Element> generating_set(const CayleyGroup& g, const ElementSet& h);

ElementSet conjugate_set(const CayleyGroup& g, const ElementSet& h, Element x);
// H normal in K (both subgroups, H <= K).
bool is_normal_in(const CayleyGroup& g, const ElementSet& k, const ElementSet& h);
bool is_normal(const CayleyGroup& g, const ElementSet& h);
/// Intersection of all K-conjugates of H: the largest subgroup of H normal
/// in K. Throws unless H <= K are subgroups.
ElementSet core_in(const CayleyGroup& g, const ElementSet& k, const ElementSet& h);
/// Smallest normal subgroup of K containing H.
ElementSet normal_closure_in(const CayleyGroup& g, const ElementSet& k, const ElementSet& h);

ElementSet derived_subgroup(const CayleyGroup& g, const ElementSet& h);
ElementSet center(const CayleyGroup& g);
bool is_soluble(const CayleyGroup& g);
bool is_nilpotent(const CayleyGroup& g);
/// Exhaustive associativity check over all triples.
bool is_associative(const CayleyGroup& g);

}  // namespace sigma
