#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sigma/catalog.hpp"
#include "sigma/lattice.hpp"
#include "sigma/partition.hpp"
#include "sigma/sigma_core.hpp"
#include "sigma/subnormality.hpp"

namespace sigma {

/// A materialized group with its lattice and step table. Not movable: the
/// lattice points into the group.
class GroupContext {
 public:
  GroupContext(CayleyGroup group, std::size_t lattice_cap);
  GroupContext(const GroupContext&) = delete;
  GroupContext& operator=(const GroupContext&) = delete;

  const CayleyGroup& group() const noexcept { return *group_; }
  const SubgroupLattice& lattice() const noexcept { return *lattice_; }
  const StepTable& steps() const noexcept { return *steps_; }
  bool soluble() const noexcept { return soluble_; }
  /// Plain subnormality of every node (iterated normal closures).
  const std::vector<bool>& subnormal() const;

 private:
  std::unique_ptr<CayleyGroup> group_;
  std::unique_ptr<SubgroupLattice> lattice_;
  std::unique_ptr<StepTable> steps_;
  bool soluble_ = false;
  mutable std::optional<std::vector<bool>> subnormal_;
};

/// Everything the verdicts need for one (group, partition) pair.
struct SigmaCase {
  SigmaPartition sigma;
  std::vector<ClassId> classes;
  bool sigma_group = false;
  bool sigma_soluble = false;
  bool sigma_nilpotent = false;
  std::optional<DispersiveWitness> dispersive;
  SubnormalityMap map;
  unsigned m_sigma = 0;

  SigmaCase(const GroupContext& ctx, SigmaPartition partition);
  std::size_t t() const noexcept { return classes.size(); }
  /// Every n-maximal subgroup is sigma-subnormal (vacuous on empty sets).
  bool all_sigma_subnormal(const SubgroupLattice& lattice, unsigned n) const;
};

enum class TheoremStatus {
  hypothesis_holds_conclusion_holds,
  hypothesis_fails,
  not_applicable,
  counterexample,
};

const char* to_string(TheoremStatus s);

struct WitnessStats {
  std::size_t dispersive_checked = 0;
  std::size_t dispersive_failed = 0;
  std::size_t subnormal_checked = 0;
  std::size_t subnormal_failed = 0;

  WitnessStats& operator+=(const WitnessStats& o);
};

struct LemmaCount {
  std::size_t checked = 0;
  std::size_t violations = 0;
};

using LemmaCounts = std::map<std::string, LemmaCount>;

struct NCheck {
  unsigned n = 0;
  bool hypothesis = false;
  std::optional<bool> conclusion;  // set only when the hypothesis holds
};

struct SubnormalSample {
  NodeId subgroup = 0;
  SubnormalWitness witness;
};

/// Per-(group, partition) record of all sigma-predicates and verdicts.
struct VerdictReport {
  std::string scope;
  std::string group_name;
  std::string partition_text;
  std::size_t order = 0;
  std::size_t sigma_size = 0;
  bool sigma_group = false;
  bool sigma_soluble = false;
  bool sigma_nilpotent = false;
  bool sigma_dispersive = false;
  unsigned m_sigma = 0;
  std::optional<DispersiveWitness> dispersive;
  std::vector<SubnormalSample> subnormal_samples;
  TheoremStatus status = TheoremStatus::not_applicable;
  std::string reason;
  std::vector<NCheck> checks;
  LemmaCounts lemmas;
  std::map<std::string, nlohmann::json> extra;

  /// Flags respect sigma-nilpotent => sigma-dispersive => sigma-group.
  bool flags_consistent() const;
  nlohmann::json to_json(const SubgroupLattice& lattice) const;
};

struct Verdict {
  TheoremStatus status = TheoremStatus::not_applicable;
  std::string reason;
};

/// Sigma-soluble G with every (n+1)-maximal subgroup sigma-subnormal must be
/// sigma-dispersive with a certificate that survives re-verification.
Verdict dispersive_verdict(const SubgroupLattice& lattice, const SigmaCase& c, unsigned n,
                           bool witness_ok);

/// Fills the flag fields and witnesses from a case and re-verifies the
/// emitted certificates.
VerdictReport base_report(const GroupContext& ctx, const SigmaCase& c, std::string scope,
                          WitnessStats& stats);

/// Single-group analysis with the thm13 verdict for this partition.
VerdictReport analyze(const GroupContext& ctx, const SigmaPartition& sigma, WitnessStats& stats);

}  // namespace sigma
