#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sigma/lattice.hpp"
#include "sigma/partition.hpp"

namespace sigma {

/// One Hall sigma_i-subgroup per class of sigma(G), sorted by class id.
struct HallSet {
  std::vector<ClassId> classes;
  std::vector<NodeId> members;

  NodeId member(ClassId c) const;
  friend bool operator==(const HallSet&, const HallSet&) = default;
};

/// Certificate for sigma-dispersiveness: a normal series
/// 1 = series[0] < ... < series[t] = G and Hall subgroups with
/// series[i] * hall(ordering[i]) = series[i+1].
struct DispersiveWitness {
  std::vector<ClassId> ordering;
  std::vector<NodeId> series;
  HallSet hall_set;
};

/// Hall Pi-subgroups of the ambient subgroup (G by default): subgroups whose
/// order is the full Pi-part of the ambient order.
std::vector<NodeId> hall_subgroups(const SubgroupLattice& lattice, const SigmaPartition& sigma,
                                   std::span<const ClassId> pi_classes,
                                   std::optional<NodeId> ambient = std::nullopt);

/// Visits complete Hall sigma-sets in lexicographic order of member ids; the
/// visitor returns false to stop early.
void for_each_complete_hall_set(const SubgroupLattice& lattice, const SigmaPartition& sigma,
                                const std::function<bool(const HallSet&)>& visit);
std::vector<HallSet> complete_hall_sets(const SubgroupLattice& lattice,
                                        const SigmaPartition& sigma);
bool is_sigma_group(const SubgroupLattice& lattice, const SigmaPartition& sigma);

/// Complete Hall sigma-sets whose members pairwise permute.
std::vector<HallSet> sigma_bases(const SubgroupLattice& lattice, const SigmaPartition& sigma,
                                 std::size_t limit = static_cast<std::size_t>(-1));

/// Every chief factor of G has sigma-primary order.
bool is_sigma_soluble(const SubgroupLattice& lattice, const SigmaPartition& sigma);

/// Every Hall sigma_i-subgroup of the ambient subgroup exists and is normal in it.
bool is_sigma_nilpotent(const SubgroupLattice& lattice, const SigmaPartition& sigma,
                        std::optional<NodeId> ambient = std::nullopt);

/// Backtracking search for a dispersive series. With no ordering, orderings of
/// sigma(G) are tried in lexicographic order of class id and the first
/// witness found is returned. Throws if `ordering` is not a permutation of
/// sigma(G).
std::optional<DispersiveWitness> is_sigma_dispersive(
    const SubgroupLattice& lattice, const SigmaPartition& sigma,
    std::optional<std::vector<ClassId>> ordering = std::nullopt);

/// Dispersive under the minimal partition.
bool has_sylow_tower(const SubgroupLattice& lattice);

}  // namespace sigma
