#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sigma/lattice.hpp"
#include "sigma/partition.hpp"

namespace sigma {

enum class StepKind { normal, sigma_primary_quotient };

const char* to_string(StepKind k);

/// Chain A = chain[0] <= ... <= chain.back() = ambient, one kind per step.
struct SubnormalWitness {
  std::vector<NodeId> chain;
  std::vector<StepKind> step_kinds;
};

/// Partition-independent data for every comparable pair H < K of a lattice:
/// whether H is normal in K and which primes divide |K : core_K(H)|.
class StepTable {
 public:
  struct Step {
    NodeId over;
    bool normal;
    std::uint32_t quotient_primes;  // bit i <-> i-th prime of |G|
  };

  explicit StepTable(const SubgroupLattice& lattice);

  const SubgroupLattice& lattice() const noexcept { return *lattice_; }
  /// Proper overgroups of h, ascending.
  const std::vector<Step>& steps(NodeId h) const { return steps_[h]; }
  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }

  /// Whether |K : core_K(H)| is sigma-primary, given the per-prime class table.
  static bool sigma_primary(std::uint32_t mask, const std::vector<ClassId>& class_of_prime);

  std::vector<ClassId> class_table(const SigmaPartition& sigma) const;

 private:
  const SubgroupLattice* lattice_;
  std::vector<std::uint64_t> primes_;
  std::vector<std::vector<Step>> steps_;
};

/// Shortest sigma-subnormal chains from every subgroup of `ambient` up to
/// `ambient`, computed over all comparable pairs.
class SubnormalityMap {
 public:
  SubnormalityMap(const StepTable& table, const SigmaPartition& sigma,
                  std::optional<NodeId> ambient = std::nullopt);

  NodeId ambient() const noexcept { return ambient_; }
  bool is_sigma_subnormal(NodeId a) const { return dist_[a] >= 0; }
  /// Length of the shortest chain, or -1.
  int distance(NodeId a) const { return dist_[a]; }
  std::optional<SubnormalWitness> witness(NodeId a) const;

 private:
  NodeId ambient_;
  std::vector<int> dist_;
  std::vector<NodeId> next_;
  std::vector<StepKind> kind_;
};

/// Iterated normal closures of H descend to H.
bool is_subnormal(const CayleyGroup& g, const ElementSet& h);

/// Definition-level decision with a shortest witness chain. Throws if A is not
/// a node of the lattice. Builds a StepTable; prefer SubnormalityMap when
/// querying many subgroups.
std::optional<SubnormalWitness> is_sigma_subnormal(const SubgroupLattice& lattice,
                                                   const SigmaPartition& sigma,
                                                   const ElementSet& a);

/// Least n >= 1 such that every n-maximal subgroup is sigma-subnormal
/// (vacuously true past the longest chain); 0 for the trivial group.
unsigned m_sigma(const SubgroupLattice& lattice, const SubnormalityMap& map);
unsigned m_sigma(const SubgroupLattice& lattice, const SigmaPartition& sigma);

/// AB = BA and A is maximal in AB.
bool is_irreducible_pair(const SubgroupLattice& lattice, NodeId a, NodeId b);

/// Abelian, exponent p, and order equal to the full p-part of |G|.
bool is_elementary_abelian_sylow(const SubgroupLattice& lattice, NodeId h);

}  // namespace sigma
