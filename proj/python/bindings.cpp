#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sigma/catalog.hpp"
#include "sigma/error.hpp"
#include "sigma/export.hpp"
#include "sigma/families.hpp"
#include "sigma/harness.hpp"
#include "sigma/report.hpp"

namespace py = pybind11;

namespace {

std::unique_ptr<sigma::GroupContext> context_for(const sigma::CatalogEntry& entry,
                                                 std::size_t order_cap) {
  return std::make_unique<sigma::GroupContext>(sigma::materialize(entry, order_cap), order_cap);
}

}  // namespace

PYBIND11_MODULE(_sigmacheck, m) {
  m.doc() = "sigma-subnormality checks on finite permutation groups";

  py::register_exception<sigma::Error>(m, "SigmaError", PyExc_ValueError);

  py::class_<sigma::GroupContext>(m, "Group")
      .def(py::init([](const std::string& ref, std::size_t order_cap) {
             return context_for(sigma::resolve_group(ref, {}, order_cap), order_cap);
           }),
           py::arg("name"), py::arg("order_cap") = 200)
      .def_static(
          "from_generators",
          [](std::size_t degree, std::vector<std::string> gens, std::string name,
             std::size_t order_cap) {
            sigma::CatalogEntry e{std::move(name), degree, std::move(gens), std::nullopt, {}};
            return context_for(e, order_cap);
          },
          py::arg("degree"), py::arg("generators"), py::arg("name") = "G",
          py::arg("order_cap") = 200)
      .def_property_readonly("name", [](const sigma::GroupContext& c) { return c.group().name(); })
      .def_property_readonly("order", [](const sigma::GroupContext& c) { return c.group().order(); })
      .def_property_readonly("subgroup_count",
                             [](const sigma::GroupContext& c) { return c.lattice().size(); })
      .def_property_readonly("soluble", &sigma::GroupContext::soluble)
      .def("analyze",
           [](const sigma::GroupContext& c, const std::string& partition) {
             sigma::WitnessStats stats;
             return sigma::analyze(c, sigma::parse_partition(partition), stats)
                 .to_json(c.lattice())
                 .dump();
           },
           py::arg("partition") = "minimal", "Report as a JSON object string.")
      .def("m_sigma",
           [](const sigma::GroupContext& c, const std::string& partition) {
             return sigma::m_sigma(c.lattice(), sigma::parse_partition(partition));
           },
           py::arg("partition") = "minimal")
      .def("has_sylow_tower",
           [](const sigma::GroupContext& c) { return sigma::has_sylow_tower(c.lattice()); })
      .def("p_group_type",
           [](const sigma::GroupContext& c) {
             return std::string(sigma::to_string(sigma::classify_p_group(c.group())));
           })
      .def("lattice_dot", [](const sigma::GroupContext& c) { return sigma::lattice_to_dot(c.lattice()); })
      .def("lattice_json",
           [](const sigma::GroupContext& c) { return sigma::lattice_to_json(c.lattice()); });

  m.def(
      "catalog_names",
      [](std::size_t max_order) {
        std::vector<std::string> names;
        for (const auto& e : sigma::builtin_catalog(max_order)) names.push_back(e.name);
        return names;
      },
      py::arg("max_order"));

  m.def(
      "prime_partitions",
      [](std::vector<std::uint64_t> primes) {
        std::vector<std::string> texts;
        for (const auto& p :
             sigma::prime_partitions(std::set<std::uint64_t>(primes.begin(), primes.end())))
          texts.push_back(p.text());
        return texts;
      },
      py::arg("primes"));

  m.def(
      "verify",
      [](const std::string& scope, std::size_t max_order, const std::string& partitions,
         std::size_t jobs, const std::optional<std::string>& catalog) {
        sigma::SweepOptions opt;
        opt.scope = sigma::parse_scope(scope);
        opt.max_order = max_order;
        opt.partitions = sigma::PartitionScope::parse(partitions);
        opt.jobs = jobs;
        sigma::CatalogLoad source;
        if (catalog)
          source = sigma::load_catalog(*catalog);
        else
          source.entries = sigma::builtin_catalog(max_order);
        sigma::SweepResult result;
        {
          py::gil_scoped_release release;
          result = sigma::run_sweep(source.entries, source.errors, opt);
        }
        return result.lines;
      },
      py::arg("scope") = "all", py::arg("max_order") = 100, py::arg("partitions") = "all",
      py::arg("jobs") = 1, py::arg("catalog") = std::nullopt,
      "Report lines (JSON objects); the last one is the summary.");
}
