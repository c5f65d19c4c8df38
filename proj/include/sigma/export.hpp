#pragma once

#include <string>

#include "sigma/lattice.hpp"

namespace sigma {

/// Cover DAG in DOT: one node per subgroup labelled "order:index", normal
/// subgroups double-circled, an edge H -> K whenever H is maximal in K.
std::string lattice_to_dot(const SubgroupLattice& lattice);

/// Structured dump: nodes with order, normality, depth mask, generators
/// (cycle notation) and covers.
std::string lattice_to_json(const SubgroupLattice& lattice);

}  // namespace sigma
