#pragma once

// Brute-force reference computations over a Cayley table. Everything here
// works on sorted element vectors and touches the group only through mul()
// and inverse(), so it shares no code with the lattice or sigma modules.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "sigma/group.hpp"

namespace oracle {

using sigma::CayleyGroup;
using sigma::Element;
using Set = std::vector<Element>;  // sorted

inline bool has(const Set& s, Element x) { return std::binary_search(s.begin(), s.end(), x); }

inline bool subset(const Set& a, const Set& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Set intersect(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline Set closure(const CayleyGroup& g, Set seed) {
  std::set<Element> s(seed.begin(), seed.end());
  s.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Element> cur(s.begin(), s.end());
    for (auto a : cur)
      for (auto b : cur)
        if (s.insert(g.mul(a, b)).second) grew = true;
  }
  return {s.begin(), s.end()};
}

inline Set whole(const CayleyGroup& g) {
  Set s(g.order());
  std::iota(s.begin(), s.end(), 0);
  return s;
}

inline Set product(const CayleyGroup& g, const Set& a, const Set& b) {
  std::set<Element> s;
  for (auto x : a)
    for (auto y : b) s.insert(g.mul(x, y));
  return {s.begin(), s.end()};
}

inline Set conjugate(const CayleyGroup& g, const Set& h, Element k) {
  std::set<Element> s;
  for (auto x : h) s.insert(g.mul(g.mul(g.inverse(k), x), k));
  return {s.begin(), s.end()};
}

/// H normal in K, checked against every element of K.
inline bool normal_in(const CayleyGroup& g, const Set& k, const Set& h) {
  for (auto x : k)
    if (conjugate(g, h, x) != h) return false;
  return true;
}

inline Set core(const CayleyGroup& g, const Set& k, const Set& h) {
  Set c = h;
  for (auto x : k) c = intersect(c, conjugate(g, h, x));
  return c;
}

/// Every subgroup, grown from the trivial one by adjoining single elements.
inline std::vector<Set> subgroups(const CayleyGroup& g) {
  std::set<Set> seen{Set{0}};
  std::vector<Set> frontier{Set{0}};
  while (!frontier.empty()) {
    std::vector<Set> next;
    for (const auto& s : frontier)
      for (Element x = 0; x < g.order(); ++x) {
        if (has(s, x)) continue;
        Set seed = s;
        seed.push_back(x);
        auto c = closure(g, seed);
        if (seen.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

inline std::vector<Set> maximal_in(const std::vector<Set>& subs, const Set& k) {
  std::vector<Set> out;
  for (const auto& h : subs) {
    if (h.size() >= k.size() || !subset(h, k)) continue;
    bool maximal = true;
    for (const auto& l : subs)
      if (l.size() > h.size() && l.size() < k.size() && subset(h, l) && subset(l, k)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(h);
  }
  return out;
}

/// Subgroups at the end of some chain of n maximal-subgroup steps from G.
inline std::set<Set> n_maximal(const CayleyGroup& g, const std::vector<Set>& subs, unsigned n) {
  std::set<Set> level{whole(g)};
  for (unsigned i = 0; i < n; ++i) {
    std::set<Set> next;
    for (const auto& k : level)
      for (auto& h : maximal_in(subs, k)) next.insert(h);
    level = std::move(next);
  }
  return level;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

/// A partition of primes as a map prime -> class label; unlisted primes are
/// their own class.
struct Classes {
  std::map<std::uint64_t, std::uint64_t> label;
  bool one = false;

  std::uint64_t of(std::uint64_t p) const {
    if (one) return 0;
    auto it = label.find(p);
    return it == label.end() ? p : it->second;
  }
  std::set<std::uint64_t> sigma(std::uint64_t n) const {
    std::set<std::uint64_t> s;
    for (auto p : prime_divisors(n)) s.insert(of(p));
    return s;
  }
  bool primary(std::uint64_t n) const { return sigma(n).size() <= 1; }
  std::uint64_t part(std::uint64_t n, std::uint64_t cls) const {
    std::uint64_t r = 1;
    for (auto p : prime_divisors(n))
      if (of(p) == cls)
        while (n % p == 0) {
          n /= p;
          r *= p;
        }
    return r;
  }
};

inline Classes minimal_classes() { return {}; }
inline Classes one_class() { return {{}, true}; }
inline Classes classes_of(const std::vector<std::vector<std::uint64_t>>& blocks) {
  Classes c;
  for (const auto& b : blocks)
    for (auto p : b) c.label[p] = b.front();
  return c;
}

/// Reachability from H up to G along steps K <= L with K normal in L or
/// L/core_L(K) sigma-primary.
inline bool sigma_subnormal(const CayleyGroup& g, const std::vector<Set>& subs,
                            const Classes& cls, const Set& h, const Set& top) {
  std::set<Set> reached{h};
  std::vector<Set> stack{h};
  while (!stack.empty()) {
    auto k = stack.back();
    stack.pop_back();
    if (k == top) return true;
    for (const auto& l : subs) {
      if (l.size() <= k.size() || !subset(k, l) || !subset(l, top) || reached.count(l)) continue;
      const bool step = normal_in(g, l, k) || cls.primary(l.size() / core(g, l, k).size());
      if (step) {
        reached.insert(l);
        stack.push_back(l);
      }
    }
  }
  return false;
}

inline bool subnormal(const CayleyGroup& g, const std::vector<Set>& subs, const Set& h) {
  std::set<Set> reached{h};
  std::vector<Set> stack{h};
  const Set top = whole(g);
  while (!stack.empty()) {
    auto k = stack.back();
    stack.pop_back();
    if (k == top) return true;
    for (const auto& l : subs)
      if (l.size() > k.size() && subset(k, l) && !reached.count(l) && normal_in(g, l, k)) {
        reached.insert(l);
        stack.push_back(l);
      }
  }
  return false;
}

/// Least n >= 1 with every n-maximal subgroup sigma-subnormal; 0 for the
/// trivial group.
inline unsigned m_sigma(const CayleyGroup& g, const std::vector<Set>& subs, const Classes& cls) {
  if (g.order() == 1) return 0;
  for (unsigned n = 1;; ++n) {
    const auto level = n_maximal(g, subs, n);
    bool all = true;
    for (const auto& h : level)
      if (!sigma_subnormal(g, subs, cls, h, whole(g))) {
        all = false;
        break;
      }
    if (all) return n;
  }
}

inline std::vector<std::uint64_t> sigma_classes(const CayleyGroup& g, const Classes& cls) {
  const auto s = cls.sigma(g.order());
  return {s.begin(), s.end()};
}

inline std::vector<Set> hall(const std::vector<Set>& subs, std::uint64_t order, const Classes& cls,
                             std::uint64_t c) {
  std::vector<Set> out;
  const auto want = cls.part(order, c);
  for (const auto& s : subs)
    if (s.size() == want) out.push_back(s);
  return out;
}

inline bool permutable(const CayleyGroup& g, const Set& a, const Set& b) {
  return product(g, a, b) == product(g, b, a);
}

/// Number of complete Hall sets whose members pairwise permute.
inline std::size_t count_sigma_bases(const CayleyGroup& g, const std::vector<Set>& subs,
                                     const Classes& cls) {
  const auto cs = sigma_classes(g, cls);
  std::vector<std::vector<Set>> options;
  for (auto c : cs) options.push_back(hall(subs, g.order(), cls, c));
  std::size_t count = 0;
  std::vector<const Set*> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == options.size()) {
      ++count;
      return;
    }
    for (const auto& h : options[i]) {
      bool ok = true;
      for (auto* p : pick)
        if (!permutable(g, *p, h)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      pick.push_back(&h);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return count;
}

/// Some ordering of sigma(G) and choice of Hall subgroups make every partial
/// product H_1...H_i a normal subgroup of G.
inline bool dispersive(const CayleyGroup& g, const std::vector<Set>& subs, const Classes& cls) {
  auto cs = sigma_classes(g, cls);
  std::sort(cs.begin(), cs.end());
  const Set top = whole(g);
  do {
    std::function<bool(std::size_t, const Set&)> rec = [&](std::size_t i, const Set& cur) {
      if (i == cs.size()) return cur == top;
      for (const auto& h : hall(subs, g.order(), cls, cs[i])) {
        auto next = product(g, cur, h);
        if (closure(g, next) != next || !normal_in(g, top, next)) continue;
        if (rec(i + 1, next)) return true;
      }
      return false;
    };
    if (rec(0, Set{0})) return true;
  } while (std::next_permutation(cs.begin(), cs.end()));
  return false;
}

inline bool sigma_nilpotent(const CayleyGroup& g, const std::vector<Set>& subs,
                            const Classes& cls) {
  for (auto c : sigma_classes(g, cls)) {
    const auto hs = hall(subs, g.order(), cls, c);
    if (hs.size() != 1 || !normal_in(g, whole(g), hs.front())) return false;
  }
  return true;
}

/// Orders of the factors of a chief series built from covers among the
/// normal subgroups.
inline std::vector<std::size_t> chief_factor_orders(const CayleyGroup& g,
                                                    const std::vector<Set>& subs) {
  std::vector<Set> normals;
  for (const auto& s : subs)
    if (normal_in(g, whole(g), s)) normals.push_back(s);
  std::vector<std::size_t> out;
  Set cur{0};
  while (cur.size() < g.order()) {
    const Set* best = nullptr;
    for (const auto& n : normals) {
      if (n.size() <= cur.size() || !subset(cur, n)) continue;
      if (!best || n.size() < best->size()) best = &n;
    }
    out.push_back(best->size() / cur.size());
    cur = *best;
  }
  return out;
}

inline std::uint64_t bell(unsigned n) {
  std::vector<std::vector<std::uint64_t>> t(n + 1);
  t[0] = {1};
  for (unsigned i = 1; i <= n; ++i) {
    t[i].push_back(t[i - 1].back());
    for (auto x : t[i - 1]) t[i].push_back(t[i].back() + x);
  }
  return t[n].front();
}

}  // namespace oracle
