#pragma once

#include <string>

#include "sigma/lattice.hpp"
#include "sigma/partition.hpp"
#include "sigma/sigma_core.hpp"
#include "sigma/subnormality.hpp"

namespace sigma {

/// Outcome of re-checking a certificate; `problem` is empty on success.
struct CheckResult {
  bool ok = true;
  std::string problem;
  explicit operator bool() const noexcept { return ok; }
};

/// Re-verifies a dispersive certificate from the element sets alone, with
/// brute-force subgroup, normality and product-set checks that do not use
/// lattice metadata.
CheckResult verify_dispersive_witness(const SubgroupLattice& lattice, const SigmaPartition& sigma,
                                      const DispersiveWitness& w);

/// Re-verifies a sigma-subnormal chain from `subject` to `ambient`. Normal
/// steps are checked by conjugating with every element; quotient steps
/// intersect all conjugates to form the core.
CheckResult verify_subnormal_witness(const SubgroupLattice& lattice, const SigmaPartition& sigma,
                                     NodeId subject, NodeId ambient, const SubnormalWitness& w);

}  // namespace sigma
