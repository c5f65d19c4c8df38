#include "sigma/witness_check.hpp"

#include <algorithm>

namespace sigma {

namespace {

CheckResult fail(std::string why) { return {false, std::move(why)}; }

bool normal_brute(const CayleyGroup& g, const ElementSet& k, const ElementSet& h) {
  const auto hs = h.indices();
  for (auto x : k.indices())
    for (auto y : hs)
      if (!h.test(g.conjugate(y, x))) return false;
  return true;
}

ElementSet core_brute(const CayleyGroup& g, const ElementSet& k, const ElementSet& h) {
  ElementSet core = h;
  for (auto x : k.indices()) core &= conjugate_set(g, h, x);
  return core;
}

}  // namespace

CheckResult verify_dispersive_witness(const SubgroupLattice& lattice, const SigmaPartition& sigma,
                                      const DispersiveWitness& w) {
  const auto& g = lattice.group();
  const std::size_t n = g.order();
  auto classes = sigma.sigma_of(n);
  auto ordering = w.ordering;
  std::sort(ordering.begin(), ordering.end());
  if (ordering != classes) return fail("ordering is not a permutation of sigma(G)");
  if (w.series.size() != classes.size() + 1) return fail("series length differs from |sigma(G)|+1");
  if (w.hall_set.classes != classes || w.hall_set.members.size() != classes.size())
    return fail("Hall set does not have one member per class");

  const ElementSet& first = lattice.elements(w.series.front());
  if (first.count() != 1 || !first.test(0)) return fail("series does not start at 1");
  if (!(lattice.elements(w.series.back()) == g.all())) return fail("series does not end at G");

  for (auto s : w.series) {
    const ElementSet& e = lattice.elements(s);
    if (!is_subgroup(g, e)) return fail("series member is not a subgroup");
    if (!normal_brute(g, g.all(), e)) return fail("series member is not normal in G");
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const ElementSet& h = lattice.elements(w.hall_set.members[i]);
    if (!is_subgroup(g, h)) return fail("Hall member is not a subgroup");
    if (h.count() != sigma.part(n, classes[i])) return fail("Hall member has the wrong order");
  }
  for (std::size_t i = 0; i < w.ordering.size(); ++i) {
    const ElementSet& cur = lattice.elements(w.series[i]);
    const ElementSet& next = lattice.elements(w.series[i + 1]);
    if (!(cur.count() < next.count())) return fail("series is not strictly increasing");
    const ElementSet& h = lattice.elements(w.hall_set.member(w.ordering[i]));
    if (!(product_set(g, cur, h) == next)) return fail("product G_i H_i differs from G_{i+1}");
  }
  return {};
}

CheckResult verify_subnormal_witness(const SubgroupLattice& lattice, const SigmaPartition& sigma,
                                     NodeId subject, NodeId ambient, const SubnormalWitness& w) {
  const auto& g = lattice.group();
  if (w.chain.empty() || w.chain.front() != subject || w.chain.back() != ambient)
    return fail("chain endpoints do not match");
  if (w.step_kinds.size() + 1 != w.chain.size()) return fail("one step kind per step required");
  for (std::size_t i = 0; i < w.step_kinds.size(); ++i) {
    const ElementSet& lower = lattice.elements(w.chain[i]);
    const ElementSet& upper = lattice.elements(w.chain[i + 1]);
    if (!is_subgroup(g, lower) || !is_subgroup(g, upper)) return fail("chain member not a subgroup");
    if (!lower.is_subset_of(upper)) return fail("chain is not ascending");
    if (w.step_kinds[i] == StepKind::normal) {
      if (!normal_brute(g, upper, lower)) return fail("declared normal step is not normal");
    } else {
      const auto core = core_brute(g, upper, lower);
      if (!sigma.is_sigma_primary(upper.count() / core.count()))
        return fail("declared quotient step is not sigma-primary");
    }
  }
  return {};
}

}  // namespace sigma
