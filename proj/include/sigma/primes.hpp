#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace sigma {

using PrimeFactorization = std::map<std::uint64_t, int>;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline PrimeFactorization factorize(std::uint64_t n) {
  PrimeFactorization f;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++f[d];
      n /= d;
    }
  }
  if (n > 1) ++f[n];
  return f;
}

// pi(n), ascending.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

inline std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// If n = p^k for a prime p, returns {p, k}; otherwise {0, 0}. n = 1 gives {1, 0}.
struct PrimePower {
  std::uint64_t prime = 0;
  int exponent = 0;
};

inline PrimePower as_prime_power(std::uint64_t n) {
  if (n == 1) return {1, 0};
  auto f = factorize(n);
  if (f.size() != 1) return {};
  return {f.begin()->first, f.begin()->second};
}

}  // namespace sigma
