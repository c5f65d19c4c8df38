#include "sigma/harness.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "sigma/error.hpp"
#include "sigma/lemmas.hpp"

namespace sigma {

using nlohmann::json;

Scope parse_scope(const std::string& text) {
  if (text == "thm13") return Scope::thm13;
  if (text == "cor14") return Scope::cor14;
  if (text == "cor15") return Scope::cor15;
  if (text == "lemmas") return Scope::lemmas;
  if (text == "all") return Scope::all;
  throw Error("unknown scope '" + text + "'");
}

const char* to_string(Scope s) {
  switch (s) {
    case Scope::thm13: return "thm13";
    case Scope::cor14: return "cor14";
    case Scope::cor15: return "cor15";
    case Scope::lemmas: return "lemmas";
    case Scope::all: return "all";
  }
  return "?";
}

PartitionScope PartitionScope::parse(const std::string& text) {
  if (text == "all") return {Kind::all, std::nullopt};
  if (text == "minimal") return {Kind::minimal, std::nullopt};
  if (text == "one") return {Kind::one, std::nullopt};
  return {Kind::explicit_text, parse_partition(text)};
}

std::string PartitionScope::text() const {
  switch (kind) {
    case Kind::all: return "all";
    case Kind::minimal: return "minimal";
    case Kind::one: return "one";
    case Kind::explicit_text: return partition->text();
  }
  return "?";
}

std::vector<SigmaPartition> partitions_for(const PartitionScope& scope, std::size_t order) {
  switch (scope.kind) {
    case PartitionScope::Kind::all: {
      const auto ps = prime_divisors(order);
      return prime_partitions(std::set<std::uint64_t>(ps.begin(), ps.end()));
    }
    case PartitionScope::Kind::minimal: return {SigmaPartition::minimal()};
    case PartitionScope::Kind::one: return {SigmaPartition::one()};
    case PartitionScope::Kind::explicit_text: return {*scope.partition};
  }
  return {};
}

CatalogEntry resolve_group(const std::string& ref, const std::vector<CatalogEntry>& catalog,
                           std::size_t order_cap) {
  const auto entries = catalog.empty() ? builtin_catalog(order_cap) : catalog;
  for (const auto& e : entries)
    if (e.name == ref) return e;
  if (!ref.empty() && std::all_of(ref.begin(), ref.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    const auto index = std::stoull(ref);
    if (index < entries.size()) return entries[index];
  }
  throw Error("unknown group '" + ref + "'");
}

void ScopeTally::add(TheoremStatus s) {
  ++cases;
  switch (s) {
    case TheoremStatus::hypothesis_holds_conclusion_holds: ++hypothesis_holds; break;
    case TheoremStatus::hypothesis_fails: ++hypothesis_fails; break;
    case TheoremStatus::not_applicable: ++not_applicable; break;
    case TheoremStatus::counterexample: ++counterexamples; break;
  }
}

ScopeTally& ScopeTally::operator+=(const ScopeTally& o) {
  cases += o.cases;
  hypothesis_holds += o.hypothesis_holds;
  hypothesis_fails += o.hypothesis_fails;
  not_applicable += o.not_applicable;
  counterexamples += o.counterexamples;
  return *this;
}

std::size_t SweepSummary::counterexamples() const {
  std::size_t n = 0;
  for (const auto& [name, t] : scopes) n += t.counterexamples;
  return n;
}

std::size_t SweepSummary::lemma_instances() const {
  std::size_t n = 0;
  for (const auto& [name, c] : lemmas) n += c.checked;
  return n;
}

std::size_t SweepSummary::lemma_violations() const {
  std::size_t n = 0;
  for (const auto& [name, c] : lemmas) n += c.violations;
  return n;
}

bool SweepSummary::passed() const {
  return counterexamples() == 0 && lemma_violations() == 0 && witnesses.dispersive_failed == 0 &&
         witnesses.subnormal_failed == 0 && flag_inconsistencies == 0 && parse_errors == 0;
}

json SweepSummary::to_json() const {
  json j;
  j["record"] = "summary";
  j["groups"] = groups;
  j["parse_errors"] = parse_errors;
  j["skipped"] = skipped;
  j["flag_inconsistencies"] = flag_inconsistencies;
  json sc = json::object();
  for (const auto& [name, t] : scopes)
    sc[name] = {{"cases", t.cases},
                {"hypothesis_holds", t.hypothesis_holds},
                {"hypothesis_fails", t.hypothesis_fails},
                {"not_applicable", t.not_applicable},
                {"counterexamples", t.counterexamples}};
  j["scopes"] = sc;
  json ls = json::object();
  for (const auto& [name, c] : lemmas) ls[name] = {{"checked", c.checked}, {"violations", c.violations}};
  j["lemmas"] = ls;
  j["lemma_instances"] = lemma_instances();
  j["lemma_violations"] = lemma_violations();
  j["witnesses"] = {{"dispersive_checked", witnesses.dispersive_checked},
                    {"dispersive_failed", witnesses.dispersive_failed},
                    {"subnormal_checked", witnesses.subnormal_checked},
                    {"subnormal_failed", witnesses.subnormal_failed}};
  j["counterexamples"] = counterexamples();
  j["passed"] = passed();
  return j;
}

SweepSummary& SweepSummary::operator+=(const SweepSummary& o) {
  groups += o.groups;
  parse_errors += o.parse_errors;
  skipped += o.skipped;
  flag_inconsistencies += o.flag_inconsistencies;
  for (const auto& [name, t] : o.scopes) scopes[name] += t;
  for (const auto& [name, c] : o.lemmas) {
    lemmas[name].checked += c.checked;
    lemmas[name].violations += c.violations;
  }
  witnesses += o.witnesses;
  return *this;
}

std::string SweepResult::text() const {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

namespace {

struct GroupOutput {
  std::vector<std::string> lines;
  SweepSummary summary;
};

bool wants(Scope requested, Scope s) { return requested == Scope::all || requested == s; }

void merge(LemmaCounts& into, const LemmaCounts& from) {
  for (const auto& [name, c] : from) {
    into[name].checked += c.checked;
    into[name].violations += c.violations;
  }
}

json error_record(const std::string& name, std::size_t line, const std::string& message) {
  json j = {{"record", "error"}, {"group", name}, {"message", message}};
  if (line) j["line"] = line;
  return j;
}

GroupOutput process_group(const CatalogEntry& entry, const SweepOptions& opt) {
  GroupOutput out;
  auto& summary = out.summary;
  std::unique_ptr<GroupContext> ctx;
  try {
    ctx = std::make_unique<GroupContext>(materialize(entry, opt.order_cap), opt.lattice_cap);
  } catch (const CapExceeded& ex) {
    ++summary.skipped;
    out.lines.push_back(error_record(entry.name, 0, ex.what()).dump());
    return out;
  } catch (const std::exception& ex) {
    ++summary.parse_errors;
    out.lines.push_back(error_record(entry.name, 0, ex.what()).dump());
    return out;
  }
  ++summary.groups;
  const auto& lattice = ctx->lattice();
  const auto& group = ctx->group();

  auto emit = [&](const VerdictReport& r) {
    if (!r.flags_consistent()) ++summary.flag_inconsistencies;
    summary.scopes[r.scope].add(r.status);
    merge(summary.lemmas, r.lemmas);
    out.lines.push_back(r.to_json(lattice).dump());
  };

  QuotientCache quotients(*ctx, opt.lattice_cap);
  for (const auto& sigma : partitions_for(opt.partitions, group.order())) {
    const SigmaCase c(*ctx, sigma);

    if (wants(opt.scope, Scope::thm13)) {
      WitnessStats w;
      auto r = base_report(*ctx, c, "thm13", w);
      const auto v = dispersive_verdict(lattice, c, static_cast<unsigned>(c.t()),
                                        w.dispersive_failed == 0);
      r.status = v.status;
      r.reason = v.reason;
      summary.witnesses += w;
      emit(r);
    }

    if (wants(opt.scope, Scope::cor14)) {
      WitnessStats w;
      auto r = base_report(*ctx, c, "cor14", w);
      summary.witnesses += w;
      if (!c.sigma_soluble) {
        r.status = TheoremStatus::not_applicable;
        r.reason = "not sigma-soluble";
      } else {
        bool any_holds = false, any_fail = false;
        for (unsigned n = 0; n <= c.t(); ++n) {
          const auto v = dispersive_verdict(lattice, c, n, w.dispersive_failed == 0);
          NCheck check{n, v.status != TheoremStatus::hypothesis_fails, std::nullopt};
          if (check.hypothesis) {
            check.conclusion = v.status == TheoremStatus::hypothesis_holds_conclusion_holds;
            any_holds = true;
            if (!*check.conclusion) {
              any_fail = true;
              r.reason = v.reason;
            }
          }
          r.checks.push_back(check);
        }
        r.status = any_fail    ? TheoremStatus::counterexample
                   : any_holds ? TheoremStatus::hypothesis_holds_conclusion_holds
                               : TheoremStatus::hypothesis_fails;
      }
      emit(r);
    }

    if (wants(opt.scope, Scope::lemmas)) {
      WitnessStats w;
      auto r = base_report(*ctx, c, "lemmas", w);
      r.lemmas = check_sigma_lemmas(*ctx, c, quotients, w);
      summary.witnesses += w;
      std::size_t violations = 0;
      for (const auto& [name, count] : r.lemmas) violations += count.violations;
      const bool witnesses_ok = w.dispersive_failed == 0 && w.subnormal_failed == 0;
      r.status = violations == 0 && witnesses_ok ? TheoremStatus::hypothesis_holds_conclusion_holds
                                                 : TheoremStatus::counterexample;
      if (violations) r.reason = std::to_string(violations) + " property violations";
      emit(r);
    }
  }

  if (wants(opt.scope, Scope::cor15)) {
    const SigmaCase c(*ctx, SigmaPartition::minimal());
    WitnessStats w;
    auto r = base_report(*ctx, c, "cor15", w);
    summary.witnesses += w;
    if (!ctx->soluble()) {
      r.status = TheoremStatus::not_applicable;
      r.reason = "not soluble";
    } else {
      const auto& subnormal = ctx->subnormal();
      const std::size_t primes = group.primes().size();
      const bool tower = c.dispersive.has_value() && w.dispersive_failed == 0;
      std::optional<unsigned> least;
      bool any_holds = false, any_fail = false;
      for (unsigned n = 1; n <= lattice.max_depth() + 1; ++n) {
        bool all = true;
        for (auto h : lattice.n_maximal_set(n))
          if (!subnormal[h]) {
            all = false;
            break;
          }
        if (all && !least) least = n;
        NCheck check{n, all && primes + 1 >= n, std::nullopt};
        if (check.hypothesis) {
          check.conclusion = tower;
          any_holds = true;
          any_fail = any_fail || !tower;
        }
        r.checks.push_back(check);
      }
      r.extra["least_n_subnormal"] = least.value_or(0);
      r.status = any_fail    ? TheoremStatus::counterexample
                 : any_holds ? TheoremStatus::hypothesis_holds_conclusion_holds
                             : TheoremStatus::hypothesis_fails;
      if (any_fail) r.reason = "no Sylow tower";
    }
    emit(r);
  }

  if (wants(opt.scope, Scope::lemmas)) {
    const SigmaCase c(*ctx, SigmaPartition::minimal());
    WitnessStats w;
    auto r = base_report(*ctx, c, "lemmas", w);
    summary.witnesses += w;
    r.extra["suite"] = "sylow";
    r.lemmas = check_sylow_lemmas(*ctx);
    std::size_t violations = 0;
    for (const auto& [name, count] : r.lemmas) violations += count.violations;
    r.status = ctx->soluble() ? (violations == 0 ? TheoremStatus::hypothesis_holds_conclusion_holds
                                                 : TheoremStatus::counterexample)
                              : TheoremStatus::not_applicable;
    emit(r);
  }
  return out;
}

}  // namespace

SweepResult run_sweep(const std::vector<CatalogEntry>& entries,
                      const std::vector<CatalogError>& errors, const SweepOptions& options) {
  std::vector<const CatalogEntry*> selected;
  for (const auto& e : entries)
    if (!e.expected_order || *e.expected_order <= options.max_order) selected.push_back(&e);

  std::vector<GroupOutput> outputs(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      SweepOptions local = options;
      local.order_cap = std::min(options.order_cap, options.max_order);
      outputs[i] = process_group(*selected[i], local);
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, selected.size()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t k = 1; k < jobs; ++k) pool.emplace_back(worker);
    worker();
  }

  SweepResult result;
  for (const auto& e : errors) {
    ++result.summary.parse_errors;
    result.lines.push_back(error_record(e.name, e.line, e.message).dump());
  }
  for (auto& o : outputs) {
    for (auto& l : o.lines) result.lines.push_back(std::move(l));
    result.summary += o.summary;
  }
  result.lines.push_back(result.summary.to_json().dump());
  return result;
}

}  // namespace sigma
