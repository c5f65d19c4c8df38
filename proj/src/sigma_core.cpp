#include "sigma/sigma_core.hpp"

#include <algorithm>
#include <map>

#include "sigma/error.hpp"

namespace sigma {

NodeId HallSet::member(ClassId c) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i] == c) return members[i];
  throw Error("class " + std::to_string(c) + " not in Hall set");
}

std::vector<NodeId> hall_subgroups(const SubgroupLattice& lattice, const SigmaPartition& sigma,
                                   std::span<const ClassId> pi_classes,
                                   std::optional<NodeId> ambient) {
  const NodeId k = ambient.value_or(lattice.top());
  const std::uint64_t target = sigma.part(lattice.order(k), pi_classes);
  std::vector<NodeId> out;
  lattice.below(k).for_each([&](std::size_t h) {
    if (lattice.order(static_cast<NodeId>(h)) == target) out.push_back(static_cast<NodeId>(h));
  });
  return out;
}

void for_each_complete_hall_set(const SubgroupLattice& lattice, const SigmaPartition& sigma,
                                const std::function<bool(const HallSet&)>& visit) {
  const auto classes = sigma.sigma_of(lattice.group().order());
  std::vector<std::vector<NodeId>> choices;
  for (auto c : classes) {
    choices.push_back(hall_subgroups(lattice, sigma, std::span<const ClassId>(&c, 1)));
    if (choices.back().empty()) return;
  }
  HallSet current{classes, std::vector<NodeId>(classes.size())};
  std::vector<std::size_t> pos(classes.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < classes.size(); ++i) current.members[i] = choices[i][pos[i]];
    if (!visit(current)) return;
    std::size_t i = classes.size();
    while (i > 0) {
      --i;
      if (++pos[i] < choices[i].size()) break;
      pos[i] = 0;
      if (i == 0) return;
    }
    if (classes.empty()) return;
  }
}

std::vector<HallSet> complete_hall_sets(const SubgroupLattice& lattice,
                                        const SigmaPartition& sigma) {
  std::vector<HallSet> out;
  for_each_complete_hall_set(lattice, sigma, [&](const HallSet& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

bool is_sigma_group(const SubgroupLattice& lattice, const SigmaPartition& sigma) {
  bool found = false;
  for_each_complete_hall_set(lattice, sigma, [&](const HallSet&) {
    found = true;
    return false;
  });
  return found;
}

std::vector<HallSet> sigma_bases(const SubgroupLattice& lattice, const SigmaPartition& sigma,
                                 std::size_t limit) {
  const auto& g = lattice.group();
  std::map<std::pair<NodeId, NodeId>, bool> permutes;
  auto permutable = [&](NodeId a, NodeId b) {
    if (a > b) std::swap(a, b);
    auto [it, fresh] = permutes.try_emplace({a, b}, false);
    if (fresh) it->second = is_permutable(g, lattice.elements(a), lattice.elements(b));
    return it->second;
  };
  std::vector<HallSet> out;
  for_each_complete_hall_set(lattice, sigma, [&](const HallSet& h) {
    for (std::size_t i = 0; i < h.members.size(); ++i)
      for (std::size_t j = i + 1; j < h.members.size(); ++j)
        if (!permutable(h.members[i], h.members[j])) return true;
    out.push_back(h);
    return out.size() < limit;
  });
  return out;
}

bool is_sigma_soluble(const SubgroupLattice& lattice, const SigmaPartition& sigma) {
  for (auto f : chief_series(lattice).factor_orders)
    if (!sigma.is_sigma_primary(f)) return false;
  return true;
}

bool is_sigma_nilpotent(const SubgroupLattice& lattice, const SigmaPartition& sigma,
                        std::optional<NodeId> ambient) {
  const NodeId k = ambient.value_or(lattice.top());
  for (auto c : sigma.sigma_of(lattice.order(k))) {
    const auto halls = hall_subgroups(lattice, sigma, std::span<const ClassId>(&c, 1), k);
    if (halls.empty()) return false;
    for (auto h : halls)
      if (!lattice.is_normal_in(h, k)) return false;
  }
  return true;
}

namespace {

struct DispersiveSearch {
  const SubgroupLattice& lattice;
  const SigmaPartition& sigma;
  std::vector<NodeId> normals;
  std::map<ClassId, std::vector<NodeId>> halls;

  bool extend(const std::vector<ClassId>& ordering, DispersiveWitness& w) {
    const std::size_t i = w.series.size() - 1;
    const NodeId cur = w.series.back();
    if (i == ordering.size()) return cur == lattice.top();
    const ClassId c = ordering[i];
    const std::size_t target = lattice.order(cur) * sigma.part(lattice.group().order(), c);
    for (auto next : normals) {
      if (lattice.order(next) != target || !lattice.contains(next, cur)) continue;
      for (auto h : halls.at(c)) {
        if (!lattice.contains(next, h)) continue;
        const auto prod = product_set(lattice.group(), lattice.elements(cur), lattice.elements(h));
        if (!(prod == lattice.elements(next))) continue;
        w.series.push_back(next);
        w.hall_set.members[std::find(w.hall_set.classes.begin(), w.hall_set.classes.end(), c) -
                           w.hall_set.classes.begin()] = h;
        if (extend(ordering, w)) return true;
        w.series.pop_back();
      }
    }
    return false;
  }
};

}  // namespace

std::optional<DispersiveWitness> is_sigma_dispersive(const SubgroupLattice& lattice,
                                                     const SigmaPartition& sigma,
                                                     std::optional<std::vector<ClassId>> ordering) {
  const auto classes = sigma.sigma_of(lattice.group().order());
  if (ordering) {
    auto sorted = *ordering;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != classes) throw Error("ordering must list each class of sigma(G) exactly once");
  }

  DispersiveSearch search{lattice, sigma, lattice.normal_subgroups(), {}};
  for (auto c : classes) {
    search.halls[c] = hall_subgroups(lattice, sigma, std::span<const ClassId>(&c, 1));
    if (search.halls[c].empty()) return std::nullopt;  // not a sigma-group
  }

  auto attempt = [&](const std::vector<ClassId>& order) -> std::optional<DispersiveWitness> {
    DispersiveWitness w{order, {lattice.bottom()}, {classes, std::vector<NodeId>(classes.size())}};
    if (search.extend(order, w)) return w;
    return std::nullopt;
  };

  if (ordering) return attempt(*ordering);
  auto order = classes;
  do {
    if (auto w = attempt(order)) return w;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

bool has_sylow_tower(const SubgroupLattice& lattice) {
  return is_sigma_dispersive(lattice, SigmaPartition::minimal()).has_value();
}

}  // namespace sigma
