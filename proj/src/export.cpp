#include "sigma/export.hpp"

#include <sstream>

#include <json.hpp>

namespace sigma {

std::string lattice_to_dot(const SubgroupLattice& lattice) {
  std::ostringstream out;
  out << "digraph \"" << lattice.group().name() << "\" {\n";
  out << "  rankdir=BT;\n";
  for (NodeId i = 0; i < lattice.size(); ++i) {
    out << "  n" << i << " [label=\"" << lattice.order(i) << ':' << i << "\", shape="
        << (lattice.is_normal(i) ? "doublecircle" : "circle") << "];\n";
  }
  for (NodeId i = 0; i < lattice.size(); ++i)
    for (NodeId k : lattice.upper_covers(i)) out << "  n" << i << " -> n" << k << ";\n";
  out << "}\n";
  return out.str();
}

std::string lattice_to_json(const SubgroupLattice& lattice) {
  const auto& g = lattice.group();
  nlohmann::json nodes = nlohmann::json::array();
  std::size_t edges = 0;
  for (NodeId i = 0; i < lattice.size(); ++i) {
    nlohmann::json gens = nlohmann::json::array();
    for (auto e : lattice.node(i).generators) gens.push_back(g.perm(e).to_cycle_string());
    const auto& covers = lattice.upper_covers(i);
    edges += covers.size();
    nodes.push_back({{"id", i},
                     {"order", lattice.order(i)},
                     {"normal", lattice.is_normal(i)},
                     {"depth_mask", lattice.depth_mask(i)},
                     {"generators", gens},
                     {"covered_by", covers}});
  }
  nlohmann::json j = {{"group", g.name()},
                      {"order", g.order()},
                      {"subgroups", lattice.size()},
                      {"edges", edges},
                      {"nodes", nodes}};
  return j.dump(2) + "\n";
}

}  // namespace sigma
