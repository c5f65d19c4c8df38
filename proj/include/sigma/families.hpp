#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sigma/group.hpp"

namespace sigma {

enum class Family {
  cyclic,
  dihedral,
  symmetric,
  alternating,
  quaternion,
  modular_p,
  special_linear_2_3,
  direct_product,
  from_generators,
};

/// Parameters for one of the fixed group families.
///
///   cyclic(n)         C_n, n >= 1
///   dihedral(n)       D_{2n} of order 2n, n >= 2 (n = 2 is the Klein group)
///   symmetric(n)      S_n, 1 <= n <= 7
///   alternating(n)    A_n, 1 <= n <= 7
///   quaternion        Q_8
///   modular_p(p, m)   <a, b | a^(p^(m-1)) = b^p = 1, b^-1 a b = a^(1 + p^(m-2))>, m >= 3
///   special_linear_2_3  SL(2,3) acting on the 8 nonzero vectors of F_3^2
///   direct_product    factors[0] x factors[1]
///   from_generators   cycle strings on `degree` points
struct NamedFamilySpec {
  Family family = Family::cyclic;
  std::vector<std::uint64_t> params;
  std::vector<NamedFamilySpec> factors;
  std::vector<std::string> generators;
  std::size_t degree = 0;

  static NamedFamilySpec cyclic(std::uint64_t n) { return {Family::cyclic, {n}, {}, {}, 0}; }
  static NamedFamilySpec dihedral(std::uint64_t n) { return {Family::dihedral, {n}, {}, {}, 0}; }
  static NamedFamilySpec symmetric(std::uint64_t n) { return {Family::symmetric, {n}, {}, {}, 0}; }
  static NamedFamilySpec alternating(std::uint64_t n) {
    return {Family::alternating, {n}, {}, {}, 0};
  }
  static NamedFamilySpec quaternion() { return {Family::quaternion, {}, {}, {}, 0}; }
  static NamedFamilySpec modular(std::uint64_t p, std::uint64_t m) {
    return {Family::modular_p, {p, m}, {}, {}, 0};
  }
  static NamedFamilySpec sl23() { return {Family::special_linear_2_3, {}, {}, {}, 0}; }
  static NamedFamilySpec product(NamedFamilySpec a, NamedFamilySpec b) {
    return {Family::direct_product, {}, {std::move(a), std::move(b)}, {}, 0};
  }
  static NamedFamilySpec permutations(std::size_t degree, std::vector<std::string> gens) {
    return {Family::from_generators, {}, {}, std::move(gens), degree};
  }
};

/// A permutation presentation of a family member.
struct GeneratorList {
  std::string name;
  std::size_t degree = 1;
  std::size_t order = 1;
  std::vector<Permutation> generators;

  std::vector<std::string> cycle_strings() const;
};

/// Canonical display name, e.g. "C6", "D8", "S4", "Q8", "M(2,4)", "C2xS3".
std::string family_name(const NamedFamilySpec& spec);

/// Generators for a family description. Direct products place the factors on disjoint
/// point sets. Throws sigma::Error for inadmissible parameters.
GeneratorList family_generators(const NamedFamilySpec& spec);

CayleyGroup make_family(const NamedFamilySpec& spec, std::size_t order_cap = kDefaultOrderCap);

enum class PGroupType { cyclic, cyclic_times_p, modular, quaternion, other };

const char* to_string(PGroupType t);

/// Structural tag for a p-group, tested in the order cyclic, C_{p^a} x C_p,
/// modular presentation (searched over all ordered element pairs),
/// quaternion of order 8, other. Generalized quaternion groups of order > 8
/// are "other". Throws if the order is not a prime power.
PGroupType classify_p_group(const CayleyGroup& p);

}  // namespace sigma
