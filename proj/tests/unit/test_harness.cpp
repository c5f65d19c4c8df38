#include <doctest.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "sigma/error.hpp"
#include "sigma/harness.hpp"
#include "sigma/report.hpp"

using namespace sigma;
using nlohmann::json;

namespace {

SweepResult sweep(Scope scope, std::size_t max_order, std::size_t jobs,
                  const std::string& partitions = "all") {
  SweepOptions opt;
  opt.scope = scope;
  opt.max_order = max_order;
  opt.jobs = jobs;
  opt.partitions = PartitionScope::parse(partitions);
  return run_sweep(builtin_catalog(max_order), {}, opt);
}

json find_case(const SweepResult& r, const std::string& scope, const std::string& group,
               const std::string& partition) {
  for (const auto& line : r.lines) {
    auto j = json::parse(line);
    if (j["record"] == "case" && j["scope"] == scope && j["group"] == group &&
        j["partition"] == partition)
      return j;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("analyze reports pinned values") {
  const auto entry = resolve_group("S4", {}, 200);
  const GroupContext ctx(materialize(entry), 200);
  WitnessStats stats;
  const auto r = analyze(ctx, SigmaPartition::minimal(), stats);
  CHECK(r.sigma_soluble);
  CHECK(r.sigma_size == 2);
  CHECK(r.m_sigma == 4);
  CHECK_FALSE(r.sigma_dispersive);
  CHECK(r.status == TheoremStatus::hypothesis_fails);

  const GroupContext c6(materialize(resolve_group("C6", {}, 200)), 200);
  const auto r6 = analyze(c6, SigmaPartition::minimal(), stats);
  CHECK(r6.sigma_nilpotent);
  CHECK(r6.sigma_dispersive);
  CHECK(r6.m_sigma == 1);

  const GroupContext a5(materialize(resolve_group("A5", {}, 200)), 200);
  const auto ra = analyze(a5, SigmaPartition::one(), stats);
  CHECK(ra.sigma_soluble);
  CHECK(ra.sigma_size == 1);
  CHECK(ra.sigma_dispersive);
  CHECK(stats.dispersive_failed == 0);
  CHECK(stats.subnormal_failed == 0);
}

TEST_CASE("groups resolve by name or index") {
  const auto cat = builtin_catalog(12);
  CHECK(resolve_group("0", cat, 12).name == cat[0].name);
  CHECK(resolve_group("D12", cat, 12).name == "D12");
  CHECK_THROWS_AS(resolve_group("nope", cat, 12), Error);
  CHECK_THROWS_AS(resolve_group("999", cat, 12), Error);
}

TEST_CASE("dispersive sweep to order 24 has no counterexample") {
  const auto r = sweep(Scope::thm13, 24, 2);
  CHECK(r.summary.counterexamples() == 0);
  CHECK(r.summary.passed());
  const auto s4 = find_case(r, "thm13", "S4", "minimal");
  REQUIRE_FALSE(s4.is_null());
  CHECK(s4["theorem_status"] == "hypothesis_fails");
}

TEST_CASE("summary counts are sums of the records") {
  const auto r = sweep(Scope::all, 20, 3);
  std::map<std::string, ScopeTally> tally;
  std::size_t instances = 0;
  for (const auto& line : r.lines) {
    const auto j = json::parse(line);
    if (j["record"] != "case") continue;
    const std::string status = j["theorem_status"];
    auto& t = tally[j["scope"]];
    ++t.cases;
    t.hypothesis_holds += status == "hypothesis_holds_conclusion_holds";
    t.hypothesis_fails += status == "hypothesis_fails";
    t.not_applicable += status == "not_applicable";
    t.counterexamples += status == "COUNTEREXAMPLE";
    if (j.contains("lemmas"))
      for (auto& [name, c] : j["lemmas"].items()) instances += c["checked"].get<std::size_t>();
  }
  for (const auto& [scope, t] : r.summary.scopes) {
    CAPTURE(scope);
    CHECK(tally[scope].cases == t.cases);
    CHECK(tally[scope].hypothesis_holds == t.hypothesis_holds);
    CHECK(tally[scope].hypothesis_fails == t.hypothesis_fails);
    CHECK(tally[scope].not_applicable == t.not_applicable);
    CHECK(tally[scope].counterexamples == t.counterexamples);
  }
  CHECK(instances == r.summary.lemma_instances());
  const auto last = json::parse(r.lines.back());
  CHECK(last["record"] == "summary");
  CHECK(last["passed"] == true);
}

TEST_CASE("sweeps do not depend on the worker count") {
  const auto a = sweep(Scope::all, 16, 1);
  const auto b = sweep(Scope::all, 16, 4);
  CHECK(a.text() == b.text());
}

TEST_CASE("partition scopes") {
  CHECK(partitions_for(PartitionScope::parse("all"), 60).size() == 5);
  CHECK(partitions_for(PartitionScope::parse("minimal"), 60).front().text() == "minimal");
  CHECK(partitions_for(PartitionScope::parse("one"), 60).front().is_one());
  CHECK(partitions_for(PartitionScope::parse("2,3"), 60).front().text() == "2,3");
  CHECK(partitions_for(PartitionScope::parse("all"), 1).size() == 1);
  const auto r = sweep(Scope::thm13, 12, 1, "one");
  for (const auto& line : r.lines) {
    const auto j = json::parse(line);
    if (j["record"] == "case") CHECK(j["partition"] == "one");
  }
}

TEST_CASE("catalog errors surface in the report and fail the run") {
  const auto load = parse_catalog(
      R"j({"name":"bad","degree":3,"generators":["(1 2)","(1 2 3)"],"expected_order":10})j" "\n"
      R"j({"name":"C3","degree":3,"generators":["(1 2 3)"],"expected_order":3})j");
  SweepOptions opt;
  opt.scope = Scope::thm13;
  const auto r = run_sweep(load.entries, load.errors, opt);
  CHECK(r.summary.parse_errors == 1);
  CHECK_FALSE(r.summary.passed());
  CHECK(json::parse(r.lines.front())["record"] == "error");
  CHECK(r.summary.groups == 1);
}

TEST_CASE("groups over the lattice cap are skipped with a record") {
  SweepOptions opt;
  opt.scope = Scope::thm13;
  opt.lattice_cap = 50;
  const auto r = run_sweep(builtin_catalog(60), {}, opt);
  CHECK(r.summary.skipped > 0);
  CHECK(r.summary.counterexamples() == 0);
}
