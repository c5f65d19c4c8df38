#include "sigma/permutation.hpp"

#include <cctype>
#include <numeric>

#include "sigma/error.hpp"

namespace sigma {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw Error("permutation images are not a bijection");
    seen[x] = true;
  }
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r(degree());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<std::uint32_t>(i);
  return r;
}

Permutation Permutation::padded(std::size_t degree) const {
  if (degree < this->degree()) throw Error("cannot shrink permutation degree");
  Permutation r(degree);
  std::copy(images_.begin(), images_.end(), r.images_.begin());
  return r;
}

Permutation Permutation::shifted(std::size_t offset, std::size_t degree) const {
  if (offset + this->degree() > degree) throw Error("shifted permutation does not fit degree");
  Permutation r(degree);
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[i + offset] = static_cast<std::uint32_t>(images_[i] + offset);
  return r;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> done(degree(), false);
  for (std::size_t start = 0; start < degree(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = images_[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw Error("degree mismatch in permutation product");
  Permutation r(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) r.images_[i] = b.images_[a.images_[i]];
  return r;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = p.degree();
  for (auto x : p.images()) h = h * 1000003u ^ x;
  return h;
}

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  if (degree == 0) throw Error("permutation degree must be positive");
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& msg) {
    throw Error("bad cycle notation '" + std::string(text) + "': " + msg);
  };

  skip_ws();
  if (i == text.size()) fail("empty text");
  while (i < text.size()) {
    if (text[i] != '(') fail("expected '('");
    ++i;
    std::vector<std::uint32_t> cycle;
    while (true) {
      skip_ws();
      if (i == text.size()) fail("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail("unexpected character");
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > degree) fail("point exceeds degree " + std::to_string(degree));
        ++i;
      }
      if (value == 0) fail("points are 1-based");
      if (used[value - 1]) fail("repeated point " + std::to_string(value));
      used[value - 1] = true;
      cycle.push_back(static_cast<std::uint32_t>(value - 1));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(images));
}

}  // namespace sigma
