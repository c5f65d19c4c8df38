#pragma once

#include <memory>
#include <vector>

#include "sigma/report.hpp"

namespace sigma {

/// Quotients G/N for the proper nontrivial normal subgroups of G, built on
/// first use and shared across partitions.
class QuotientCache {
 public:
  struct Entry {
    NodeId kernel;
    std::vector<Element> projection;
    std::unique_ptr<GroupContext> context;
  };

  explicit QuotientCache(const GroupContext& ctx, std::size_t lattice_cap)
      : ctx_(&ctx), lattice_cap_(lattice_cap) {}

  const Entry& get(NodeId kernel);
  const std::vector<NodeId>& kernels();
  /// Image of a subgroup of G in the quotient by `e.kernel`.
  NodeId image(const Entry& e, NodeId subgroup) const;

 private:
  const GroupContext* ctx_;
  std::size_t lattice_cap_;
  std::vector<std::unique_ptr<Entry>> entries_;
  std::vector<NodeId> kernels_;
  bool kernels_ready_ = false;
};

/// Property checks that depend on the partition: transfer of
/// sigma-subnormality to subgroups, quotients, meets and joins, Hall
/// intersections, chain monotonicity, irreducible pairs in sigma-bases,
/// maximal-subgroup indices, and Frattini saturation of dispersiveness.
/// Every sigma-subnormal witness is re-verified into `stats`.
LemmaCounts check_sigma_lemmas(const GroupContext& ctx, const SigmaCase& c,
                               QuotientCache& quotients, WitnessStats& stats);

/// Sylow-structure checks for soluble groups (minimal partition): Sylow
/// types under the n-maximal subnormality hypothesis, and the rank-two
/// statements.
LemmaCounts check_sylow_lemmas(const GroupContext& ctx);

}  // namespace sigma
