#include "sigma/lemmas.hpp"

#include <algorithm>

#include "sigma/families.hpp"
#include "sigma/witness_check.hpp"

namespace sigma {

const std::vector<NodeId>& QuotientCache::kernels() {
  if (!kernels_ready_) {
    const auto& lattice = ctx_->lattice();
    for (auto n : lattice.normal_subgroups())
      if (n != lattice.bottom() && n != lattice.top()) kernels_.push_back(n);
    kernels_ready_ = true;
  }
  return kernels_;
}

const QuotientCache::Entry& QuotientCache::get(NodeId kernel) {
  for (const auto& e : entries_)
    if (e->kernel == kernel) return *e;
  auto q = quotient_group(ctx_->group(), ctx_->lattice().elements(kernel));
  auto e = std::make_unique<Entry>();
  e->kernel = kernel;
  e->projection = std::move(q.projection);
  e->context = std::make_unique<GroupContext>(std::move(q.group), lattice_cap_);
  entries_.push_back(std::move(e));
  return *entries_.back();
}

NodeId QuotientCache::image(const Entry& e, NodeId subgroup) const {
  const auto& qg = e.context->group();
  ElementSet img(qg.order());
  ctx_->lattice().elements(subgroup).for_each([&](std::size_t x) { img.set(e.projection[x]); });
  return e.context->lattice().index_of(img);
}

namespace {

struct Counter {
  LemmaCounts& counts;
  void operator()(const char* name, bool ok) {
    auto& c = counts[name];
    ++c.checked;
    if (!ok) ++c.violations;
  }
};

}  // namespace

LemmaCounts check_sigma_lemmas(const GroupContext& ctx, const SigmaCase& c,
                               QuotientCache& quotients, WitnessStats& stats) {
  LemmaCounts counts;
  Counter check{counts};
  const auto& lattice = ctx.lattice();
  const auto& g = ctx.group();
  const auto& sigma = c.sigma;
  const std::size_t n_nodes = lattice.size();
  const std::size_t order = g.order();

  std::vector<NodeId> sn;
  for (NodeId i = 0; i < n_nodes; ++i)
    if (c.map.is_sigma_subnormal(i)) sn.push_back(i);

  for (auto a : sn) {
    auto w = c.map.witness(a);
    ++stats.subnormal_checked;
    if (!verify_subnormal_witness(lattice, sigma, a, lattice.top(), *w)) ++stats.subnormal_failed;
  }

  // sigma-subnormality inside each subgroup, as ambient
  std::vector<std::unique_ptr<SubnormalityMap>> inside(n_nodes);
  auto within = [&](NodeId k) -> const SubnormalityMap& {
    if (!inside[k]) inside[k] = std::make_unique<SubnormalityMap>(ctx.steps(), sigma, k);
    return *inside[k];
  };

  for (auto a : sn)
    for (NodeId k = 0; k < n_nodes; ++k)
      check("intersection_in_subgroup", within(k).is_sigma_subnormal(lattice.meet(a, k)));

  for (auto a : sn) {
    const auto& m = within(a);
    lattice.below(a).for_each([&](std::size_t k) {
      if (m.is_sigma_subnormal(static_cast<NodeId>(k)))
        check("transitivity", c.map.is_sigma_subnormal(static_cast<NodeId>(k)));
    });
  }

  for (std::size_t i = 0; i < sn.size(); ++i)
    for (std::size_t j = i + 1; j < sn.size(); ++j)
      check("meet_and_join", c.map.is_sigma_subnormal(lattice.meet(sn[i], sn[j])) &&
                                 c.map.is_sigma_subnormal(lattice.join(sn[i], sn[j])));

  for (auto kernel : quotients.kernels()) {
    const auto& q = quotients.get(kernel);
    const SubnormalityMap qmap(q.context->steps(), sigma);
    for (auto a : sn) check("quotient_image", qmap.is_sigma_subnormal(quotients.image(q, a)));
    lattice.above(kernel).for_each([&](std::size_t k) {
      if (qmap.is_sigma_subnormal(quotients.image(q, static_cast<NodeId>(k))))
        check("quotient_preimage", c.map.is_sigma_subnormal(static_cast<NodeId>(k)));
    });
  }

  const std::size_t t = c.t();
  for (std::uint32_t mask = 1; mask < (1u << t); ++mask) {
    std::vector<ClassId> pi;
    for (std::size_t i = 0; i < t; ++i)
      if (mask >> i & 1u) pi.push_back(c.classes[i]);
    for (auto h : hall_subgroups(lattice, sigma, pi)) {
      for (auto a : sn) {
        const std::uint64_t pi_part = sigma.part(lattice.order(a), pi);
        if (pi_part == 1) continue;  // A is a Pi'-group
        const auto meet = lattice.meet(a, h);
        check("hall_intersection", lattice.order(meet) > 1 && lattice.order(meet) == pi_part);
      }
    }
  }

  for (auto a : sn) {
    if (a == lattice.bottom()) continue;
    const auto pi = sigma.sigma_of(lattice.order(a));
    if (sigma.part(order, pi) != lattice.order(a)) continue;  // not a sigma-Hall subgroup
    check("hall_subgroup_normal", lattice.is_normal(a));
  }

  if (sigma.separates_primes_of(order)) {
    const auto& plain = ctx.subnormal();
    for (NodeId i = 0; i < n_nodes; ++i)
      check("prime_separated_subnormal", c.map.is_sigma_subnormal(i) == plain[i]);
  }

  for (unsigned n = 1; n <= lattice.max_depth() + 1; ++n) {
    if (!c.all_sigma_subnormal(lattice, n)) continue;
    check("chain_upward_closed", c.all_sigma_subnormal(lattice, n + 1));
    if (n > 1)
      for (auto k : lattice.n_maximal_set(n - 1))
        check("chain_sigma_nilpotent", is_sigma_nilpotent(lattice, sigma, k));
  }

  if (c.sigma_soluble) {
    constexpr std::size_t kMaxBases = 32;
    const auto bases = sigma_bases(lattice, sigma, kMaxBases);
    check("sigma_basis_exists", !bases.empty());
    for (const auto& b : bases)
      for (std::size_t i = 0; i < b.members.size(); ++i)
        for (std::size_t j = 0; j < b.members.size(); ++j) {
          if (i == j) continue;
          if (!is_irreducible_pair(lattice, b.members[i], b.members[j])) continue;
          check("irreducible_pair_sylow", is_elementary_abelian_sylow(lattice, b.members[j]));
        }

    const auto& maximal = lattice.maximal_subgroups(lattice.top());
    for (auto m : maximal)
      check("maximal_index_primary", sigma.is_sigma_primary(order / lattice.order(m)));
    for (auto cls : c.classes) {
      bool found = false;
      for (auto m : maximal)
        if (sigma.is_pi_number(order / lattice.order(m), std::span<const ClassId>(&cls, 1))) {
          found = true;
          break;
        }
      check("maximal_index_each_class", found);
    }
  }

  const NodeId phi = frattini_subgroup(lattice);
  if (phi != lattice.bottom() && c.sigma_group) {
    const auto& q = quotients.get(phi);
    const auto& ql = q.context->lattice();
    if (sigma.sigma_of(q.context->group().order()) == c.classes) {
      auto ordering = c.classes;
      do {
        if (!is_sigma_dispersive(ql, sigma, ordering)) continue;
        const auto w = is_sigma_dispersive(lattice, sigma, ordering);
        const bool ok = w && verify_dispersive_witness(lattice, sigma, *w);
        if (w) {
          ++stats.dispersive_checked;
          if (!ok) ++stats.dispersive_failed;
        }
        check("frattini_saturation", ok);
      } while (std::next_permutation(ordering.begin(), ordering.end()));
    }
  }
  return counts;
}

LemmaCounts check_sylow_lemmas(const GroupContext& ctx) {
  LemmaCounts counts;
  Counter check{counts};
  if (!ctx.soluble()) return counts;
  const auto& lattice = ctx.lattice();
  const auto& g = ctx.group();
  const auto primes = g.primes();
  const auto& subnormal = ctx.subnormal();

  auto sylows = [&](std::uint64_t p) {
    const std::uint64_t target = ipow(p, g.factorization().at(p));
    std::vector<NodeId> out;
    for (NodeId i = 0; i < lattice.size(); ++i)
      if (lattice.order(i) == target) out.push_back(i);
    return out;
  };

  bool qualifies = false;
  for (unsigned n = 1; n <= lattice.max_depth() + 1 && !qualifies; ++n) {
    bool all = true;
    for (auto h : lattice.n_maximal_set(n))
      if (!subnormal[h]) {
        all = false;
        break;
      }
    qualifies = all && primes.size() + 1 >= n;
  }
  if (qualifies) {
    for (auto p : primes)
      for (auto s : sylows(p)) {
        if (lattice.is_normal(s)) {
          check("sylow_structure", true);
          continue;
        }
        const auto type = classify_p_group(subgroup_as_group(g, lattice.elements(s)).group);
        check("sylow_structure", type != PGroupType::other);
      }
  }

  if (rank(lattice) == 2) {
    const auto q = primes.back();
    if (q > 3) {
      const auto s = sylows(q);
      check("rank_two_sylow", s.size() == 1 && lattice.is_normal(s.front()));
    }
    if (g.order() % 2 != 0 || g.order() % 3 != 0)
      check("rank_two_sylow_tower", has_sylow_tower(lattice));
  }
  return counts;
}

}  // namespace sigma
