#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sigma/bitset.hpp"
#include "sigma/group.hpp"

namespace sigma {

using NodeId = std::uint32_t;

inline constexpr std::size_t kDefaultLatticeCap = 128;

/// All subgroups of a group in canonical order (ascending order, then
/// lexicographic element pattern), with the cover relation and the depths at
/// which each subgroup occurs in maximal chains from G.
///
/// Node 0 is the trivial subgroup and node size()-1 is G. Immutable once
/// built; the parent group must outlive the lattice.
class SubgroupLattice {
 public:
  struct Node {
    ElementSet elements;
    std::size_t order = 0;
    std::vector<Element> generators;
    bool normal = false;  // in G
  };

  /// Enumerates every subgroup by repeated single-element extension starting
  /// from the cyclic subgroups. Throws CapExceeded if |G| > lattice_cap.
  explicit SubgroupLattice(const CayleyGroup& g, std::size_t lattice_cap = kDefaultLatticeCap);

  const CayleyGroup& group() const noexcept { return *group_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  NodeId top() const noexcept { return static_cast<NodeId>(nodes_.size() - 1); }
  NodeId bottom() const noexcept { return 0; }

  const Node& node(NodeId i) const { return nodes_[i]; }
  const ElementSet& elements(NodeId i) const { return nodes_[i].elements; }
  std::size_t order(NodeId i) const { return nodes_[i].order; }
  bool is_normal(NodeId i) const { return nodes_[i].normal; }

  std::optional<NodeId> find(const ElementSet& s) const;
  NodeId index_of(const ElementSet& s) const;  // throws if s is not a subgroup node

  /// H <= K.
  bool contains(NodeId k, NodeId h) const { return below_[k].test(h); }
  /// Nodes contained in K (K included).
  const NodeSet& below(NodeId k) const { return below_[k]; }
  /// Nodes containing H (H included).
  const NodeSet& above(NodeId h) const { return above_[h]; }

  /// Maximal subgroups of K, canonical order.
  const std::vector<NodeId>& maximal_subgroups(NodeId k) const { return lower_covers_[k]; }
  /// Subgroups in which H is maximal, canonical order.
  const std::vector<NodeId>& upper_covers(NodeId h) const { return upper_covers_[h]; }
  bool is_maximal_in(NodeId h, NodeId k) const;

  /// Bit n is set iff the node is n-maximal in G (reachable from G by
  /// exactly n cover steps).
  std::uint64_t depth_mask(NodeId i) const { return depth_masks_[i]; }
  /// All n-maximal subgroups of G; {G} for n = 0, empty past the longest chain.
  std::vector<NodeId> n_maximal_set(unsigned n) const;
  unsigned max_depth() const noexcept { return max_depth_; }

  /// H normal in K (requires H <= K).
  bool is_normal_in(NodeId h, NodeId k) const;
  NodeId meet(NodeId a, NodeId b) const;
  NodeId join(NodeId a, NodeId b) const;

  std::vector<NodeId> normal_subgroups() const;

 private:
  const CayleyGroup* group_;
  std::vector<Node> nodes_;
  std::unordered_map<ElementSet, NodeId, BitsetHash> index_;
  std::vector<NodeSet> below_;
  std::vector<NodeSet> above_;
  std::vector<std::vector<NodeId>> lower_covers_;
  std::vector<std::vector<NodeId>> upper_covers_;
  std::vector<std::uint64_t> depth_masks_;
  unsigned max_depth_ = 0;
};

/// Chief series 1 = chain[0] < ... < chain.back() = G of normal subgroups of G.
struct ChiefSeries {
  std::vector<NodeId> chain;
  std::vector<std::size_t> factor_orders;
};

enum class TieBreak { first, last };

/// Greedy series in the normal-subgroup sublattice: each step takes a normal
/// subgroup minimal among those strictly containing the previous one, the
/// first (or last) such in canonical order.
ChiefSeries chief_series(const SubgroupLattice& lattice, TieBreak tie = TieBreak::first);

/// Largest k with a chief factor of order p^k. Throws for insoluble groups.
int rank(const SubgroupLattice& lattice);

/// Intersection of all maximal subgroups (trivial for the trivial group).
NodeId frattini_subgroup(const SubgroupLattice& lattice);

}  // namespace sigma
