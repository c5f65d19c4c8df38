#include "sigma/partition.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "sigma/error.hpp"
#include "sigma/primes.hpp"

namespace sigma {

SigmaPartition SigmaPartition::one() {
  SigmaPartition s;
  s.one_ = true;
  return s;
}

SigmaPartition SigmaPartition::from_classes(std::vector<std::vector<std::uint64_t>> classes) {
  std::set<std::uint64_t> seen;
  for (auto& c : classes) {
    if (c.empty()) throw Error("empty partition class");
    for (auto p : c) {
      if (!is_prime(p)) throw Error(std::to_string(p) + " is not a prime");
      if (!seen.insert(p).second) throw Error("prime " + std::to_string(p) + " listed twice");
    }
    std::sort(c.begin(), c.end());
  }
  std::sort(classes.begin(), classes.end());
  SigmaPartition s;
  // singleton classes are implied by the policy
  for (auto& c : classes)
    if (c.size() > 1) s.classes_.push_back(std::move(c));
  return s;
}

ClassId SigmaPartition::class_of(std::uint64_t prime) const {
  if (one_) return 2;
  for (const auto& c : classes_)
    if (std::binary_search(c.begin(), c.end(), prime)) return c.front();
  return prime;
}

std::vector<ClassId> SigmaPartition::sigma_of(std::uint64_t n) const {
  std::vector<ClassId> out;
  for (auto p : prime_divisors(n)) out.push_back(class_of(p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool SigmaPartition::is_pi_number(std::uint64_t n, std::span<const ClassId> pi_classes) const {
  for (auto p : prime_divisors(n))
    if (std::find(pi_classes.begin(), pi_classes.end(), class_of(p)) == pi_classes.end())
      return false;
  return true;
}

std::uint64_t SigmaPartition::part(std::uint64_t n, ClassId c) const {
  return part(n, std::span<const ClassId>(&c, 1));
}

std::uint64_t SigmaPartition::part(std::uint64_t n, std::span<const ClassId> pi_classes) const {
  std::uint64_t r = 1;
  for (const auto& [p, e] : factorize(n))
    if (std::find(pi_classes.begin(), pi_classes.end(), class_of(p)) != pi_classes.end())
      r *= ipow(p, e);
  return r;
}

bool SigmaPartition::separates_primes_of(std::uint64_t n) const {
  return sigma_of(n).size() == prime_divisors(n).size();
}

std::string SigmaPartition::text() const {
  if (one_) return "one";
  if (classes_.empty()) return "minimal";
  std::string out;
  for (const auto& c : classes_) {
    if (!out.empty()) out += '|';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c[i]);
    }
  }
  return out;
}

SigmaPartition parse_partition(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "minimal") return SigmaPartition::minimal();
  if (text == "one") return SigmaPartition::one();
  if (text.empty()) throw Error("empty partition text");

  std::vector<std::vector<std::uint64_t>> classes(1);
  std::size_t start = 0;
  auto flush_token = [&](std::size_t end) {
    const auto token = trim(text.substr(start, end - start));
    if (token.empty()) throw Error("empty token in partition '" + std::string(text) + "'");
    std::uint64_t v = 0;
    for (char ch : token) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw Error("bad token '" + std::string(token) + "' in partition");
      v = v * 10 + static_cast<std::uint64_t>(ch - '0');
      if (v > (1u << 30)) throw Error("prime too large in partition");
    }
    classes.back().push_back(v);
  };
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',' || text[i] == '|') {
      flush_token(i);
      start = i + 1;
      if (i < text.size() && text[i] == '|') classes.emplace_back();
    }
  }
  return SigmaPartition::from_classes(std::move(classes));
}

}  // namespace sigma
