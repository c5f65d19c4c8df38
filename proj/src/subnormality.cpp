#include "sigma/subnormality.hpp"

#include <algorithm>

#include "sigma/error.hpp"

namespace sigma {

const char* to_string(StepKind k) {
  return k == StepKind::normal ? "normal" : "sigma-primary-quotient";
}

StepTable::StepTable(const SubgroupLattice& lattice)
    : lattice_(&lattice), primes_(lattice.group().primes()), steps_(lattice.size()) {
  const auto& g = lattice.group();
  auto prime_mask = [&](std::uint64_t n) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < primes_.size(); ++i)
      if (n % primes_[i] == 0) mask |= 1u << i;
    return mask;
  };

  for (NodeId h = 0; h < lattice.size(); ++h) {
    const auto& hn = lattice.node(h);
    lattice.above(h).for_each([&](std::size_t ki) {
      const auto k = static_cast<NodeId>(ki);
      if (k == h) return;
      const auto& kn = lattice.node(k);
      bool normal = true;
      for (auto x : kn.generators) {
        for (auto y : hn.generators)
          if (!hn.elements.test(g.conjugate(y, x))) {
            normal = false;
            break;
          }
        if (!normal) break;
      }
      std::size_t core_order = hn.order;
      if (!normal) {
        ElementSet core = hn.elements;
        bool changed = true;
        while (changed) {
          changed = false;
          for (auto x : kn.generators) {
            ElementSet next = core & conjugate_set(g, core, x);
            if (!(next == core)) {
              core = std::move(next);
              changed = true;
            }
          }
        }
        core_order = core.count();
      }
      steps_[h].push_back({k, normal, prime_mask(kn.order / core_order)});
    });
  }
}

bool StepTable::sigma_primary(std::uint32_t mask, const std::vector<ClassId>& class_of_prime) {
  ClassId seen = 0;
  for (std::size_t i = 0; mask; ++i, mask >>= 1) {
    if (!(mask & 1u)) continue;
    if (seen && seen != class_of_prime[i]) return false;
    seen = class_of_prime[i];
  }
  return true;
}

std::vector<ClassId> StepTable::class_table(const SigmaPartition& sigma) const {
  std::vector<ClassId> out;
  for (auto p : primes_) out.push_back(sigma.class_of(p));
  return out;
}

SubnormalityMap::SubnormalityMap(const StepTable& table, const SigmaPartition& sigma,
                                 std::optional<NodeId> ambient)
    : ambient_(ambient.value_or(table.lattice().top())) {
  const auto& lattice = table.lattice();
  const auto classes = table.class_table(sigma);
  const NodeSet& inside = lattice.below(ambient_);
  dist_.assign(lattice.size(), -1);
  next_.assign(lattice.size(), 0);
  kind_.assign(lattice.size(), StepKind::normal);
  dist_[ambient_] = 0;
  next_[ambient_] = ambient_;

  for (NodeId h = ambient_; h-- > 0;) {
    if (!inside.test(h)) continue;
    for (const auto& s : table.steps(h)) {
      if (!inside.test(s.over) || dist_[s.over] < 0) continue;
      const bool ok = s.normal || StepTable::sigma_primary(s.quotient_primes, classes);
      if (!ok) continue;
      const int d = dist_[s.over] + 1;
      // steps are ascending, so the first strict improvement keeps the
      // canonically smallest successor
      if (dist_[h] < 0 || d < dist_[h]) {
        dist_[h] = d;
        next_[h] = s.over;
        kind_[h] = s.normal ? StepKind::normal : StepKind::sigma_primary_quotient;
      }
    }
  }
}

std::optional<SubnormalWitness> SubnormalityMap::witness(NodeId a) const {
  if (dist_[a] < 0) return std::nullopt;
  SubnormalWitness w;
  w.chain.push_back(a);
  while (a != ambient_) {
    w.step_kinds.push_back(kind_[a]);
    a = next_[a];
    w.chain.push_back(a);
  }
  return w;
}

bool is_subnormal(const CayleyGroup& g, const ElementSet& h) {
  if (!is_subgroup(g, h)) throw Error("is_subnormal needs a subgroup");
  ElementSet cur = g.all();
  while (!(cur == h)) {
    ElementSet next = normal_closure_in(g, cur, h);
    if (next == cur) return false;
    cur = std::move(next);
  }
  return true;
}

std::optional<SubnormalWitness> is_sigma_subnormal(const SubgroupLattice& lattice,
                                                   const SigmaPartition& sigma,
                                                   const ElementSet& a) {
  const NodeId id = lattice.index_of(a);
  const StepTable table(lattice);
  return SubnormalityMap(table, sigma).witness(id);
}

unsigned m_sigma(const SubgroupLattice& lattice, const SubnormalityMap& map) {
  if (lattice.group().order() == 1) return 0;
  for (unsigned n = 1;; ++n) {
    bool all = true;
    for (auto h : lattice.n_maximal_set(n))
      if (!map.is_sigma_subnormal(h)) {
        all = false;
        break;
      }
    if (all) return n;
  }
}

unsigned m_sigma(const SubgroupLattice& lattice, const SigmaPartition& sigma) {
  const StepTable table(lattice);
  return m_sigma(lattice, SubnormalityMap(table, sigma));
}

bool is_irreducible_pair(const SubgroupLattice& lattice, NodeId a, NodeId b) {
  const auto& g = lattice.group();
  const auto ab = product_set(g, lattice.elements(a), lattice.elements(b));
  if (!(ab == product_set(g, lattice.elements(b), lattice.elements(a)))) return false;
  const auto node = lattice.find(ab);
  if (!node) return false;
  return lattice.is_maximal_in(a, *node);
}

bool is_elementary_abelian_sylow(const SubgroupLattice& lattice, NodeId h) {
  const auto& g = lattice.group();
  const auto pp = as_prime_power(lattice.order(h));
  if (pp.prime < 2) return false;
  const auto full = g.factorization().at(pp.prime);
  if (pp.exponent != full) return false;
  const auto xs = lattice.elements(h).indices();
  for (auto x : xs) {
    if (x != 0 && g.element_order(x) != pp.prime) return false;
    for (auto y : xs)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  }
  return true;
}

}  // namespace sigma
