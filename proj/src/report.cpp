#include "sigma/report.hpp"

#include "sigma/witness_check.hpp"

namespace sigma {

using nlohmann::json;

GroupContext::GroupContext(CayleyGroup group, std::size_t lattice_cap)
    : group_(std::make_unique<CayleyGroup>(std::move(group))),
      lattice_(std::make_unique<SubgroupLattice>(*group_, lattice_cap)),
      steps_(std::make_unique<StepTable>(*lattice_)),
      soluble_(is_soluble(*group_)) {}

const std::vector<bool>& GroupContext::subnormal() const {
  if (!subnormal_) {
    std::vector<bool> flags(lattice_->size());
    for (NodeId i = 0; i < lattice_->size(); ++i)
      flags[i] = lattice_->is_normal(i) || is_subnormal(*group_, lattice_->elements(i));
    subnormal_ = std::move(flags);
  }
  return *subnormal_;
}

SigmaCase::SigmaCase(const GroupContext& ctx, SigmaPartition partition)
    : sigma(std::move(partition)),
      classes(sigma.sigma_of(ctx.group().order())),
      map(ctx.steps(), sigma) {
  const auto& lattice = ctx.lattice();
  sigma_group = is_sigma_group(lattice, sigma);
  sigma_soluble = is_sigma_soluble(lattice, sigma);
  sigma_nilpotent = sigma_group && is_sigma_nilpotent(lattice, sigma);
  if (sigma_group) dispersive = is_sigma_dispersive(lattice, sigma);
  m_sigma = sigma::m_sigma(lattice, map);
}

bool SigmaCase::all_sigma_subnormal(const SubgroupLattice& lattice, unsigned n) const {
  for (auto h : lattice.n_maximal_set(n))
    if (!map.is_sigma_subnormal(h)) return false;
  return true;
}

const char* to_string(TheoremStatus s) {
  switch (s) {
    case TheoremStatus::hypothesis_holds_conclusion_holds: return "hypothesis_holds_conclusion_holds";
    case TheoremStatus::hypothesis_fails: return "hypothesis_fails";
    case TheoremStatus::not_applicable: return "not_applicable";
    case TheoremStatus::counterexample: return "COUNTEREXAMPLE";
  }
  return "?";
}

WitnessStats& WitnessStats::operator+=(const WitnessStats& o) {
  dispersive_checked += o.dispersive_checked;
  dispersive_failed += o.dispersive_failed;
  subnormal_checked += o.subnormal_checked;
  subnormal_failed += o.subnormal_failed;
  return *this;
}

bool VerdictReport::flags_consistent() const {
  if (sigma_nilpotent && !sigma_dispersive) return false;
  if (sigma_dispersive && !sigma_group) return false;
  return true;
}

json VerdictReport::to_json(const SubgroupLattice& lattice) const {
  json j;
  j["record"] = "case";
  j["scope"] = scope;
  j["group"] = group_name;
  j["order"] = order;
  j["partition"] = partition_text;
  j["sigma_size"] = sigma_size;
  j["flags"] = {{"sigma_group", sigma_group},
                {"sigma_soluble", sigma_soluble},
                {"sigma_nilpotent", sigma_nilpotent},
                {"sigma_dispersive", sigma_dispersive}};
  j["m_sigma"] = m_sigma;

  json witnesses;
  if (dispersive) {
    json series_orders = json::array();
    for (auto s : dispersive->series) series_orders.push_back(lattice.order(s));
    witnesses["dispersive"] = {{"ordering", dispersive->ordering},
                               {"series", dispersive->series},
                               {"series_orders", series_orders},
                               {"hall_classes", dispersive->hall_set.classes},
                               {"hall_members", dispersive->hall_set.members}};
  } else {
    witnesses["dispersive"] = nullptr;
  }
  json samples = json::array();
  for (const auto& s : subnormal_samples) {
    json orders = json::array();
    json kinds = json::array();
    for (auto c : s.witness.chain) orders.push_back(lattice.order(c));
    for (auto k : s.witness.step_kinds) kinds.push_back(to_string(k));
    samples.push_back({{"subgroup", s.subgroup},
                       {"chain", s.witness.chain},
                       {"chain_orders", orders},
                       {"steps", kinds}});
  }
  witnesses["subnormal_samples"] = samples;
  j["witnesses"] = witnesses;
  j["theorem_status"] = to_string(status);
  if (!reason.empty()) j["reason"] = reason;
  if (!checks.empty()) {
    json cs = json::array();
    for (const auto& c : checks) {
      json x = {{"n", c.n}, {"hypothesis", c.hypothesis}};
      if (c.conclusion) x["conclusion"] = *c.conclusion;
      cs.push_back(x);
    }
    j["checks"] = cs;
  }
  if (!lemmas.empty()) {
    json ls;
    for (const auto& [name, count] : lemmas)
      ls[name] = {{"checked", count.checked}, {"violations", count.violations}};
    j["lemmas"] = ls;
  }
  for (const auto& [k, v] : extra) j[k] = v;
  return j;
}

Verdict dispersive_verdict(const SubgroupLattice& lattice, const SigmaCase& c, unsigned n,
                           bool witness_ok) {
  if (!c.sigma_soluble) return {TheoremStatus::not_applicable, "not sigma-soluble"};
  if (!c.sigma_group) return {TheoremStatus::not_applicable, "not a sigma-group"};
  if (!c.all_sigma_subnormal(lattice, n + 1))
    return {TheoremStatus::hypothesis_fails,
            "some " + std::to_string(n + 1) + "-maximal subgroup is not sigma-subnormal"};
  if (!c.dispersive) return {TheoremStatus::counterexample, "no dispersive series found"};
  if (!witness_ok) return {TheoremStatus::counterexample, "dispersive witness failed re-verification"};
  return {TheoremStatus::hypothesis_holds_conclusion_holds, ""};
}

VerdictReport base_report(const GroupContext& ctx, const SigmaCase& c, std::string scope,
                          WitnessStats& stats) {
  const auto& lattice = ctx.lattice();
  VerdictReport r;
  r.scope = std::move(scope);
  r.group_name = ctx.group().name();
  r.partition_text = c.sigma.text();
  r.order = ctx.group().order();
  r.sigma_size = c.t();
  r.sigma_group = c.sigma_group;
  r.sigma_soluble = c.sigma_soluble;
  r.sigma_nilpotent = c.sigma_nilpotent;
  r.sigma_dispersive = c.dispersive.has_value();
  r.m_sigma = c.m_sigma;
  r.dispersive = c.dispersive;

  if (c.dispersive) {
    ++stats.dispersive_checked;
    if (!verify_dispersive_witness(lattice, c.sigma, *c.dispersive)) ++stats.dispersive_failed;
  }
  constexpr std::size_t kSamples = 3;
  for (auto h : lattice.n_maximal_set(static_cast<unsigned>(c.t() + 1))) {
    if (r.subnormal_samples.size() == kSamples) break;
    auto w = c.map.witness(h);
    if (!w) continue;
    ++stats.subnormal_checked;
    if (!verify_subnormal_witness(lattice, c.sigma, h, lattice.top(), *w)) ++stats.subnormal_failed;
    r.subnormal_samples.push_back({h, std::move(*w)});
  }
  return r;
}

VerdictReport analyze(const GroupContext& ctx, const SigmaPartition& sigma, WitnessStats& stats) {
  const SigmaCase c(ctx, sigma);
  const std::size_t failed_before = stats.dispersive_failed;
  VerdictReport r = base_report(ctx, c, "analyze", stats);
  const auto v = dispersive_verdict(ctx.lattice(), c, static_cast<unsigned>(c.t()),
                                    stats.dispersive_failed == failed_before);
  r.status = v.status;
  r.reason = v.reason;
  r.extra["subgroups"] = ctx.lattice().size();
  r.extra["soluble"] = ctx.soluble();
  if (ctx.soluble()) r.extra["rank"] = rank(ctx.lattice());
  r.extra["sylow_tower"] = has_sylow_tower(ctx.lattice());
  return r;
}

}  // namespace sigma
