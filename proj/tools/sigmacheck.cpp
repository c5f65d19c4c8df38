#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "sigma/catalog.hpp"
#include "sigma/error.hpp"
#include "sigma/export.hpp"
#include "sigma/harness.hpp"
#include "sigma/report.hpp"

namespace {

std::vector<sigma::CatalogEntry> load_or_report(const std::string& path, std::size_t cap) {
  if (path.empty()) return {};
  auto load = sigma::load_catalog(path, cap);
  for (const auto& e : load.errors)
    std::cerr << path << ':' << e.line << ": " << e.name << (e.name.empty() ? "" : ": ") << e.message
              << '\n';
  return std::move(load.entries);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sigma-subnormality and sigma-dispersiveness checks on finite groups"};
  app.require_subcommand(1);

  std::string group_ref, catalog_path, partition_text = "minimal";
  std::size_t order_cap = 200;
  auto* analyze = app.add_subcommand("analyze", "report sigma-properties of one group");
  analyze->add_option("--group", group_ref, "catalog name or 0-based index")->required();
  analyze->add_option("--catalog", catalog_path, "line-delimited catalog file");
  analyze->add_option("--sigma", partition_text, "minimal, one, or classes like 2,3|5");
  analyze->add_option("--order-cap", order_cap, "largest group order accepted");

  std::string scope_text = "all", partitions_text = "all", out_path;
  sigma::SweepOptions sweep;
  auto* verify = app.add_subcommand("verify", "sweep the suites over a catalog");
  verify->add_option("--scope", scope_text)
      ->check(CLI::IsMember({"thm13", "cor14", "cor15", "lemmas", "all"}));
  verify->add_option("--catalog", catalog_path, "line-delimited catalog file");
  verify->add_option("--max-order", sweep.max_order);
  verify->add_option("--partitions", partitions_text, "all, minimal, one, or classes");
  verify->add_option("--jobs", sweep.jobs)->check(CLI::PositiveNumber);
  verify->add_option("--lattice-cap", sweep.lattice_cap);
  verify->add_option("--out", out_path, "report file (stdout when absent)");

  std::string format = "dot";
  auto* lattice = app.add_subcommand("lattice", "export the subgroup lattice");
  lattice->add_option("--group", group_ref, "catalog name or 0-based index")->required();
  lattice->add_option("--catalog", catalog_path, "line-delimited catalog file");
  lattice->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
  lattice->add_option("--order-cap", order_cap, "largest group order accepted");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      const auto entry =
          sigma::resolve_group(group_ref, load_or_report(catalog_path, order_cap), order_cap);
      const sigma::GroupContext ctx(sigma::materialize(entry, order_cap), order_cap);
      sigma::WitnessStats stats;
      const auto report = sigma::analyze(ctx, sigma::parse_partition(partition_text), stats);
      std::cout << report.to_json(ctx.lattice()).dump(2) << '\n';
      return report.status == sigma::TheoremStatus::counterexample ? 1 : 0;
    }
    if (*lattice) {
      const auto entry =
          sigma::resolve_group(group_ref, load_or_report(catalog_path, order_cap), order_cap);
      const auto group = sigma::materialize(entry, order_cap);
      const sigma::SubgroupLattice lat(group, order_cap);
      std::cout << (format == "dot" ? sigma::lattice_to_dot(lat) : sigma::lattice_to_json(lat));
      return 0;
    }
    sweep.scope = sigma::parse_scope(scope_text);
    sweep.partitions = sigma::PartitionScope::parse(partitions_text);
    sigma::CatalogLoad source;
    if (catalog_path.empty())
      source.entries = sigma::builtin_catalog(sweep.max_order);
    else
      source = sigma::load_catalog(catalog_path, sweep.order_cap);
    const auto result = sigma::run_sweep(source.entries, source.errors, sweep);
    if (out_path.empty()) {
      std::cout << result.text();
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw sigma::Error("cannot write '" + out_path + "'");
      out << result.text();
    }
    std::cerr << result.summary.to_json().dump() << '\n';
    return result.summary.passed() ? 0 : 1;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  }
}
