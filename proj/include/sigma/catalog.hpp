#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sigma/group.hpp"
#include "sigma/partition.hpp"

namespace sigma {

/// A group given by permutation generators in cycle notation.
struct CatalogEntry {
  std::string name;
  std::size_t degree = 1;
  std::vector<std::string> generators;
  std::optional<std::size_t> expected_order;
  std::vector<std::string> tags;

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

struct CatalogError {
  std::size_t line = 0;  // 1-based; 0 when not tied to a file line
  std::string name;
  std::string message;
};

struct CatalogLoad {
  std::vector<CatalogEntry> entries;
  std::vector<CatalogError> errors;
};

/// Cyclic, dihedral (D4 upward), S3-S5, A4-A5, Q8, the modular p-groups,
/// SL(2,3) and all pairwise direct products of nontrivial members, each of
/// order at most max_order, sorted by (order, name). Always starts with the
/// trivial group C1.
std::vector<CatalogEntry> builtin_catalog(std::size_t max_order);

/// One JSON object per line; blank lines and lines starting with '#' are
/// skipped. Each record is validated by building its closure: malformed
/// lines and order mismatches become per-line errors.
CatalogLoad load_catalog(const std::string& path, std::size_t order_cap = kDefaultOrderCap);
CatalogLoad parse_catalog(std::string_view text, std::size_t order_cap = kDefaultOrderCap);

std::string to_json_line(const CatalogEntry& entry);
std::string serialize_catalog(const std::vector<CatalogEntry>& entries);

/// Builds the group; throws if the closure order differs from expected_order.
CayleyGroup materialize(const CatalogEntry& entry, std::size_t order_cap = kDefaultOrderCap);

/// All set partitions of `primes` (restricted growth strings in lexicographic
/// order: the single class first, all singletons last). Throws CapExceeded
/// above `max_primes` primes.
std::vector<SigmaPartition> prime_partitions(const std::set<std::uint64_t>& primes,
                                             std::size_t max_primes = 4);

}  // namespace sigma
