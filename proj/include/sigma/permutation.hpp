#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sigma {

/// A bijection on {0..degree-1}. Products compose left to right:
/// (a * b)(i) = b(a(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  std::size_t degree() const noexcept { return images_.size(); }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }
  std::uint32_t operator[](std::size_t i) const { return images_[i]; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  // Extends the permutation by fixed points to the given degree.
  Permutation padded(std::size_t degree) const;
  // Moves every point up by offset, fixing {0..offset-1}.
  Permutation shifted(std::size_t offset, std::size_t degree) const;

  // Disjoint-cycle notation with 1-based points; "()" for the identity.
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Parses disjoint-cycle notation such as "(1 2)(3 4)"; points are 1-based
/// and at most `degree`. Throws sigma::Error on malformed text, repeated
/// points, or points beyond the degree.
Permutation parse_permutation(std::string_view text, std::size_t degree);

}  // namespace sigma
