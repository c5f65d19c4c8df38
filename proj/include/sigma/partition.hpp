#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sigma {

/// A class of a partition, identified by its smallest prime.
using ClassId = std::uint64_t;

/// A partition of the set of all primes, stored as finitely many listed
/// classes; every unlisted prime forms its own singleton class. The special
/// partition "one" puts every prime in a single class.
class SigmaPartition {
 public:
  static SigmaPartition minimal() { return SigmaPartition(); }
  static SigmaPartition one();
  /// Throws sigma::Error for non-primes, empty classes, or a prime listed twice.
  static SigmaPartition from_classes(std::vector<std::vector<std::uint64_t>> classes);

  ClassId class_of(std::uint64_t prime) const;

  /// sigma(n): classes meeting pi(n), ascending.
  std::vector<ClassId> sigma_of(std::uint64_t n) const;
  bool is_sigma_primary(std::uint64_t n) const { return sigma_of(n).size() <= 1; }
  /// pi(n) lies in the union of the classes in `pi_classes`.
  bool is_pi_number(std::uint64_t n, std::span<const ClassId> pi_classes) const;
  /// Largest divisor of n that is a number of the given class.
  std::uint64_t part(std::uint64_t n, ClassId c) const;
  std::uint64_t part(std::uint64_t n, std::span<const ClassId> pi_classes) const;

  /// True when every prime in pi(n) has its own class.
  bool separates_primes_of(std::uint64_t n) const;

  bool is_one() const noexcept { return one_; }
  const std::vector<std::vector<std::uint64_t>>& listed_classes() const noexcept { return classes_; }

  /// "minimal", "one", or classes such as "2,3|5".
  std::string text() const;

  friend bool operator==(const SigmaPartition&, const SigmaPartition&) = default;

 private:
  SigmaPartition() = default;

  bool one_ = false;
  std::vector<std::vector<std::uint64_t>> classes_;  // each sorted, ordered by first prime
};

/// Grammar: "minimal" | "one" | class ("|" class)*, class = prime ("," prime)*.
SigmaPartition parse_partition(std::string_view text);

}  // namespace sigma
