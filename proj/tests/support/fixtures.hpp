#pragma once

#include <string>
#include <vector>

#include "oracles.hpp"
#include "sigma/bitset.hpp"
#include "sigma/families.hpp"

namespace fixture {

inline sigma::CayleyGroup perms(std::size_t degree, std::vector<std::string> gens) {
  return sigma::make_family(sigma::NamedFamilySpec::permutations(degree, std::move(gens)));
}

inline sigma::CayleyGroup family(const sigma::NamedFamilySpec& spec) {
  return sigma::make_family(spec);
}

inline oracle::Set to_set(const sigma::ElementSet& s) {
  const auto idx = s.indices();
  return {idx.begin(), idx.end()};
}

inline sigma::ElementSet to_bits(const sigma::CayleyGroup& g, const oracle::Set& s) {
  return g.set_of(s);
}

/// Small groups with varied subgroup structure for oracle comparisons.
inline std::vector<sigma::NamedFamilySpec> small_zoo() {
  using S = sigma::NamedFamilySpec;
  return {S::cyclic(1),       S::cyclic(6),      S::cyclic(8),      S::dihedral(4),
          S::dihedral(6),     S::symmetric(3),   S::quaternion(),   S::alternating(4),
          S::symmetric(4),    S::modular(2, 4),  S::sl23(),         S::product(S::cyclic(2), S::dihedral(2)),
          S::product(S::cyclic(3), S::symmetric(3)), S::dihedral(5), S::product(S::cyclic(2), S::cyclic(6))};
}

}  // namespace fixture
