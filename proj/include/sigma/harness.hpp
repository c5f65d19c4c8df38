#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sigma/catalog.hpp"
#include "sigma/report.hpp"

namespace sigma {

enum class Scope { thm13, cor14, cor15, lemmas, all };

Scope parse_scope(const std::string& text);
const char* to_string(Scope s);

/// Which partitions each group is checked under. `all` enumerates every set
/// partition of pi(G).
struct PartitionScope {
  enum class Kind { all, minimal, one, explicit_text } kind = Kind::all;
  std::optional<SigmaPartition> partition;

  static PartitionScope parse(const std::string& text);
  std::string text() const;
};

struct SweepOptions {
  Scope scope = Scope::all;
  std::size_t max_order = 100;
  PartitionScope partitions;
  std::size_t jobs = 1;
  std::size_t lattice_cap = kDefaultLatticeCap;
  std::size_t order_cap = kDefaultOrderCap;
};

struct ScopeTally {
  std::size_t cases = 0;
  std::size_t hypothesis_holds = 0;
  std::size_t hypothesis_fails = 0;
  std::size_t not_applicable = 0;
  std::size_t counterexamples = 0;

  void add(TheoremStatus s);
  ScopeTally& operator+=(const ScopeTally& o);
};

struct SweepSummary {
  std::size_t groups = 0;
  std::size_t parse_errors = 0;
  std::size_t skipped = 0;  // groups over the lattice cap
  std::size_t flag_inconsistencies = 0;
  std::map<std::string, ScopeTally> scopes;
  LemmaCounts lemmas;
  WitnessStats witnesses;

  std::size_t counterexamples() const;
  std::size_t lemma_instances() const;
  std::size_t lemma_violations() const;
  /// No counterexample, lemma violation, failed witness, flag inconsistency
  /// or parse error.
  bool passed() const;
  nlohmann::json to_json() const;
  SweepSummary& operator+=(const SweepSummary& o);
};

struct SweepResult {
  std::vector<std::string> lines;  // one JSON object per case, summary last
  SweepSummary summary;

  std::string text() const;
};

/// Runs the selected suites over every entry of order <= max_order. Groups
/// are distributed over `jobs` worker threads; records are emitted in
/// catalog order so the output does not depend on the worker count.
SweepResult run_sweep(const std::vector<CatalogEntry>& entries,
                      const std::vector<CatalogError>& errors, const SweepOptions& options);

/// Looks a group up by name, or by 0-based position, in the given catalog
/// (the builtin catalog up to `order_cap` when `catalog` is empty).
CatalogEntry resolve_group(const std::string& ref, const std::vector<CatalogEntry>& catalog,
                           std::size_t order_cap);

/// Partitions used for a group of the given order under the scope.
std::vector<SigmaPartition> partitions_for(const PartitionScope& scope, std::size_t order);

}  // namespace sigma
