#include "sigma/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "sigma/error.hpp"

namespace sigma {

namespace {

bool normal_by_generators(const CayleyGroup& g, const ElementSet& h,
                          const std::vector<Element>& h_gens,
                          const std::vector<Element>& k_gens) {
  for (auto x : k_gens)
    for (auto y : h_gens)
      if (!h.test(g.conjugate(y, x))) return false;
  return true;
}

}  // namespace

SubgroupLattice::SubgroupLattice(const CayleyGroup& g, std::size_t lattice_cap) : group_(&g) {
  if (g.order() > lattice_cap)
    throw CapExceeded("group order " + std::to_string(g.order()) + " exceeds lattice cap " +
                          std::to_string(lattice_cap),
                      g.order());

  // One generator per distinct cyclic subgroup.
  std::vector<Element> cyclic_reps;
  {
    std::unordered_map<ElementSet, Element, BitsetHash> seen;
    for (Element x = 1; x < g.order(); ++x)
      if (seen.emplace(cyclic_subgroup(g, x), x).second) cyclic_reps.push_back(x);
  }

  std::vector<Node> found;
  std::unordered_map<ElementSet, NodeId, BitsetHash> found_index;
  auto add = [&](ElementSet s, std::vector<Element> gens) {
    if (found_index.contains(s)) return;
    found_index.emplace(s, static_cast<NodeId>(found.size()));
    const auto order = s.count();
    found.push_back({std::move(s), order, std::move(gens), false});
  };

  add(g.trivial(), {});
  for (auto x : cyclic_reps) add(cyclic_subgroup(g, x), {x});
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (auto x : cyclic_reps) {
      if (found[i].elements.test(x)) continue;
      ElementSet s = found[i].elements;
      std::vector<Element> gens = found[i].generators;
      extend_subgroup(g, s, gens, x);
      add(std::move(s), std::move(gens));
    }
  }

  std::vector<std::size_t> perm(found.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return canonical_less(found[a].elements, found[b].elements);
  });
  nodes_.reserve(found.size());
  for (auto i : perm) nodes_.push_back(std::move(found[i]));

  const std::size_t n = nodes_.size();
  for (NodeId i = 0; i < n; ++i) {
    index_.emplace(nodes_[i].elements, i);
    nodes_[i].normal = normal_by_generators(g, nodes_[i].elements, nodes_[i].generators,
                                            g.generators());
  }

  below_.assign(n, NodeSet(n));
  above_.assign(n, NodeSet(n));
  for (NodeId k = 0; k < n; ++k) {
    below_[k].set(k);
    above_[k].set(k);
    for (NodeId h = 0; h < k; ++h) {
      if (nodes_[h].order >= nodes_[k].order || nodes_[k].order % nodes_[h].order) continue;
      if (nodes_[h].elements.is_subset_of(nodes_[k].elements)) {
        below_[k].set(h);
        above_[h].set(k);
      }
    }
  }

  // Maximal subgroups of K: scan proper subgroups by decreasing order and keep
  // those not inside an already accepted maximal subgroup.
  lower_covers_.assign(n, {});
  upper_covers_.assign(n, {});
  for (NodeId k = 0; k < n; ++k) {
    std::vector<NodeId> maximal;
    auto proper = below_[k].indices();
    for (auto it = proper.rbegin(); it != proper.rend(); ++it) {
      const NodeId h = *it;
      if (h == k) continue;
      bool inside = false;
      for (auto m : maximal)
        if (below_[m].test(h)) {
          inside = true;
          break;
        }
      if (!inside) maximal.push_back(h);
    }
    std::sort(maximal.begin(), maximal.end());
    for (auto h : maximal) upper_covers_[h].push_back(k);
    lower_covers_[k] = std::move(maximal);
  }

  depth_masks_.assign(n, 0);
  depth_masks_[top()] = 1;
  for (NodeId k = top() + 1; k-- > 0;)
    for (auto h : lower_covers_[k]) depth_masks_[h] |= depth_masks_[k] << 1;
  for (auto m : depth_masks_) max_depth_ = std::max(max_depth_, static_cast<unsigned>(63 - std::countl_zero(m)));
}

std::optional<NodeId> SubgroupLattice::find(const ElementSet& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId SubgroupLattice::index_of(const ElementSet& s) const {
  auto id = find(s);
  if (!id) throw Error("element set is not a subgroup of " + group_->name());
  return *id;
}

bool SubgroupLattice::is_maximal_in(NodeId h, NodeId k) const {
  const auto& m = lower_covers_[k];
  return std::binary_search(m.begin(), m.end(), h);
}

std::vector<NodeId> SubgroupLattice::n_maximal_set(unsigned n) const {
  std::vector<NodeId> out;
  if (n >= 64) return out;
  for (NodeId i = 0; i < size(); ++i)
    if ((depth_masks_[i] >> n) & 1u) out.push_back(i);
  return out;
}

bool SubgroupLattice::is_normal_in(NodeId h, NodeId k) const {
  if (!contains(k, h)) throw Error("is_normal_in needs H <= K");
  return normal_by_generators(*group_, nodes_[h].elements, nodes_[h].generators,
                              nodes_[k].generators);
}

NodeId SubgroupLattice::meet(NodeId a, NodeId b) const {
  return index_of(nodes_[a].elements & nodes_[b].elements);
}

NodeId SubgroupLattice::join(NodeId a, NodeId b) const {
  // The join is the smallest common overgroup, hence first in canonical order.
  return static_cast<NodeId>((above_[a] & above_[b]).first());
}

std::vector<NodeId> SubgroupLattice::normal_subgroups() const {
  std::vector<NodeId> out;
  for (NodeId i = 0; i < size(); ++i)
    if (nodes_[i].normal) out.push_back(i);
  return out;
}

ChiefSeries chief_series(const SubgroupLattice& lattice, TieBreak tie) {
  const auto normals = lattice.normal_subgroups();
  ChiefSeries series;
  NodeId cur = lattice.bottom();
  series.chain.push_back(cur);
  while (cur != lattice.top()) {
    std::vector<NodeId> candidates;
    for (auto k : normals)
      if (k != cur && lattice.contains(k, cur)) candidates.push_back(k);
    std::vector<NodeId> minimal;
    for (auto k : candidates) {
      bool has_smaller = false;
      for (auto j : candidates)
        if (j != k && lattice.contains(k, j)) {
          has_smaller = true;
          break;
        }
      if (!has_smaller) minimal.push_back(k);
    }
    const NodeId next = tie == TieBreak::first ? minimal.front() : minimal.back();
    series.factor_orders.push_back(lattice.order(next) / lattice.order(cur));
    series.chain.push_back(next);
    cur = next;
  }
  return series;
}

int rank(const SubgroupLattice& lattice) {
  const auto series = chief_series(lattice);
  int r = 0;
  for (auto f : series.factor_orders) {
    const auto pp = as_prime_power(f);
    if (pp.prime == 0) throw Error("rank is defined only for soluble groups");
    r = std::max(r, pp.exponent);
  }
  return r;
}

NodeId frattini_subgroup(const SubgroupLattice& lattice) {
  const auto& maximal = lattice.maximal_subgroups(lattice.top());
  if (maximal.empty()) return lattice.bottom();
  ElementSet phi = lattice.group().all();
  for (auto m : maximal) phi &= lattice.elements(m);
  return lattice.index_of(phi);
}

}  // namespace sigma
