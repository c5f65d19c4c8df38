#include "sigma/group.hpp"

#include <algorithm>
#include <unordered_map>

#include "sigma/error.hpp"

namespace sigma {

CayleyGroup CayleyGroup::from_table(std::string name, std::size_t order, std::vector<Element> table,
                                    std::vector<Permutation> element_perms,
                                    std::vector<Element> generators) {
  if (order == 0) throw Error("group order must be positive");
  if (table.size() != order * order) throw Error("table size does not match order");
  CayleyGroup g;
  g.name_ = std::move(name);
  g.order_ = order;
  g.table_ = std::move(table);

  for (std::size_t x = 0; x < order; ++x)
    if (g.mul(0, static_cast<Element>(x)) != x || g.mul(static_cast<Element>(x), 0) != x)
      throw Error("element 0 is not the identity");

  std::vector<char> seen(order);
  for (std::size_t r = 0; r < order; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < order; ++c) {
      const Element v = g.table_[r * order + c];
      if (v >= order || seen[v]) throw Error("table row is not a permutation");
      seen[v] = 1;
    }
  }
  for (std::size_t c = 0; c < order; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < order; ++r) {
      const Element v = g.table_[r * order + c];
      if (seen[v]) throw Error("table column is not a permutation");
      seen[v] = 1;
    }
  }

  g.inverse_.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      if (g.table_[a * order + b] == 0) {
        g.inverse_[a] = static_cast<Element>(b);
        break;
      }

  if (element_perms.empty()) {
    // right regular representation
    element_perms.reserve(order);
    for (std::size_t a = 0; a < order; ++a) {
      std::vector<std::uint32_t> images(order);
      for (std::size_t x = 0; x < order; ++x) images[x] = g.table_[x * order + a];
      element_perms.emplace_back(std::move(images));
    }
  }
  if (element_perms.size() != order) throw Error("one permutation per element required");
  g.element_perms_ = std::move(element_perms);

  for (auto x : generators)
    if (x >= order) throw Error("generator index out of range");
  g.generators_ = std::move(generators);
  g.factorization_ = factorize(order);
  if (generated_subgroup(g, g.set_of(g.generators_)).count() != order)
    throw Error("generators do not generate the group");
  return g;
}

std::size_t CayleyGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

std::vector<std::uint64_t> CayleyGroup::primes() const {
  std::vector<std::uint64_t> out;
  for (const auto& [p, e] : factorization_) out.push_back(p);
  return out;
}

bool CayleyGroup::is_abelian() const {
  for (auto a : generators_)
    for (auto b : generators_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

ElementSet CayleyGroup::trivial() const {
  ElementSet s(order_);
  s.set(0);
  return s;
}

ElementSet CayleyGroup::all() const {
  ElementSet s(order_);
  s.set_all();
  return s;
}

ElementSet CayleyGroup::set_of(std::span<const Element> elements) const {
  ElementSet s(order_);
  for (auto x : elements) {
    if (x >= order_) throw Error("element index out of range");
    s.set(x);
  }
  return s;
}

CayleyGroup group_from_generators(std::span<const Permutation> gens, std::size_t order_cap,
                                  std::string name, std::size_t degree) {
  if (!gens.empty()) degree = gens.front().degree();
  if (degree == 0) degree = 1;
  for (const auto& p : gens)
    if (p.degree() != degree) throw Error("generators must share one degree");

  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::unordered_map<Permutation, Element, PermutationHash> index{{elements[0], 0}};
  std::vector<Element> gen_index;

  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& s : gens) {
      Permutation y = elements[i] * s;
      if (index.contains(y)) continue;
      if (elements.size() + 1 > order_cap)
        throw CapExceeded("closure exceeds order cap " + std::to_string(order_cap) + " (reached " +
                              std::to_string(elements.size() + 1) + " elements)",
                          elements.size() + 1);
      index.emplace(y, static_cast<Element>(elements.size()));
      elements.push_back(std::move(y));
    }
  }
  for (const auto& s : gens) {
    const Element e = index.at(s);
    if (e != 0 && std::find(gen_index.begin(), gen_index.end(), e) == gen_index.end())
      gen_index.push_back(e);
  }

  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(elements[a] * elements[b]);

  return CayleyGroup::from_table(std::move(name), n, std::move(table), std::move(elements),
                                 std::move(gen_index));
}

CayleyGroup direct_product(const CayleyGroup& g, const CayleyGroup& h, std::size_t order_cap) {
  const std::size_t m = h.order();
  const std::size_t n = g.order() * m;
  if (n > order_cap)
    throw CapExceeded("direct product order " + std::to_string(n) + " exceeds cap", n);

  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto ga = static_cast<Element>(a / m), ha = static_cast<Element>(a % m);
      const auto gb = static_cast<Element>(b / m), hb = static_cast<Element>(b % m);
      table[a * n + b] = static_cast<Element>(g.mul(ga, gb) * m + h.mul(ha, hb));
    }

  const std::size_t dg = g.perm(0).degree(), dh = h.perm(0).degree();
  std::vector<Permutation> perms;
  perms.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    const Permutation left = g.perm(static_cast<Element>(a / m)).padded(dg + dh);
    const Permutation right = h.perm(static_cast<Element>(a % m)).shifted(dg, dg + dh);
    perms.push_back(left * right);
  }

  std::vector<Element> gens;
  for (auto x : g.generators()) gens.push_back(static_cast<Element>(x * m));
  for (auto y : h.generators()) gens.push_back(y);

  return CayleyGroup::from_table(g.name() + "x" + h.name(), n, std::move(table), std::move(perms),
                                 std::move(gens));
}

Quotient quotient_group(const CayleyGroup& g, const ElementSet& n) {
  if (!is_subgroup(g, n)) throw Error("quotient kernel is not a subgroup");
  if (!is_normal(g, n)) throw Error("quotient kernel is not normal");

  constexpr Element unset = ~Element{0};
  std::vector<Element> projection(g.order(), unset);
  std::vector<Element> reps;
  const auto kernel = n.indices();
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (projection[x] != unset) continue;
    const auto id = static_cast<Element>(reps.size());
    reps.push_back(static_cast<Element>(x));
    for (auto k : kernel) projection[g.mul(k, static_cast<Element>(x))] = id;
  }

  const std::size_t q = reps.size();
  std::vector<Element> table(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) table[i * q + j] = projection[g.mul(reps[i], reps[j])];

  std::vector<Element> gens;
  for (auto x : g.generators()) {
    const Element c = projection[x];
    if (c != 0 && std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(c);
  }

  Quotient out;
  out.group = CayleyGroup::from_table(g.name() + "/" + std::to_string(n.count()), q,
                                      std::move(table), {}, std::move(gens));
  out.projection = std::move(projection);
  return out;
}

SubgroupGroup subgroup_as_group(const CayleyGroup& g, const ElementSet& h) {
  if (!is_subgroup(g, h)) throw Error("not a subgroup");
  SubgroupGroup out;
  out.embedding = h.indices();
  const std::size_t n = out.embedding.size();
  std::vector<Element> local(g.order(), 0);
  for (std::size_t i = 0; i < n; ++i) local[out.embedding[i]] = static_cast<Element>(i);

  std::vector<Element> table(n * n);
  std::vector<Permutation> perms;
  perms.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = local[g.mul(out.embedding[a], out.embedding[b])];
    perms.push_back(g.perm(out.embedding[a]));
  }
  std::vector<Element> gens;
  for (auto x : generating_set(g, h)) gens.push_back(local[x]);

  out.group = CayleyGroup::from_table(g.name() + "<" + std::to_string(n) + ">", n,
                                      std::move(table), std::move(perms), std::move(gens));
  return out;
}

ElementSet product_set(const CayleyGroup& g, const ElementSet& a, const ElementSet& b) {
  if (a.universe() != g.order() || b.universe() != g.order())
    throw Error("element set belongs to a different group");
  ElementSet out(g.order());
  const auto bs = b.indices();
  a.for_each([&](std::size_t x) {
    for (auto y : bs) out.set(g.mul(static_cast<Element>(x), y));
  });
  return out;
}

bool is_permutable(const CayleyGroup& g, const ElementSet& a, const ElementSet& b) {
  return product_set(g, a, b) == product_set(g, b, a);
}

bool is_subgroup(const CayleyGroup& g, const ElementSet& s) {
  if (s.universe() != g.order() || !s.test(0)) return false;
  const auto xs = s.indices();
  for (auto x : xs)
    for (auto y : xs)
      if (!s.test(g.mul(x, y))) return false;
  return true;
}

bool extend_subgroup(const CayleyGroup& g, ElementSet& base, std::vector<Element>& gens, Element x) {
  if (base.test(x)) return false;
  gens.push_back(x);
  // Dimino: the set stays a union of right cosets H*r of the old subgroup H.
  const auto old = base.indices();
  std::vector<Element> reps{g.identity()};
  auto add_coset = [&](Element r) {
    for (auto h : old) base.set(g.mul(h, r));
    reps.push_back(r);
  };
  add_coset(x);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Element y = g.mul(reps[i], gens[k]);
      if (!base.test(y)) add_coset(y);
    }
  return true;
}

ElementSet generated_subgroup(const CayleyGroup& g, const ElementSet& seed) {
  if (seed.universe() != g.order()) throw Error("element set belongs to a different group");
  ElementSet s = g.trivial();
  std::vector<Element> gens;
  seed.for_each([&](std::size_t x) { extend_subgroup(g, s, gens, static_cast<Element>(x)); });
  return s;
}

ElementSet cyclic_subgroup(const CayleyGroup& g, Element x) {
  ElementSet s = g.trivial();
  for (Element y = x; y != 0; y = g.mul(y, x)) s.set(y);
  return s;
}

std::vector<Element> generating_set(const CayleyGroup& g, const ElementSet& h) {
  ElementSet s = g.trivial();
  std::vector<Element> gens;
  h.for_each([&](std::size_t x) { extend_subgroup(g, s, gens, static_cast<Element>(x)); });
  return gens;
}

ElementSet conjugate_set(const CayleyGroup& g, const ElementSet& h, Element x) {
  ElementSet out(g.order());
  h.for_each([&](std::size_t y) { out.set(g.conjugate(static_cast<Element>(y), x)); });
  return out;
}

bool is_normal_in(const CayleyGroup& g, const ElementSet& k, const ElementSet& h) {
  const auto hg = generating_set(g, h);
  for (auto x : generating_set(g, k))
    for (auto y : hg)
      if (!h.test(g.conjugate(y, x))) return false;
  return true;
}

bool is_normal(const CayleyGroup& g, const ElementSet& h) {
  const auto hg = generating_set(g, h);
  for (auto x : g.generators())
    for (auto y : hg)
      if (!h.test(g.conjugate(y, x))) return false;
  return true;
}

ElementSet core_in(const CayleyGroup& g, const ElementSet& k, const ElementSet& h) {
  if (!is_subgroup(g, k) || !is_subgroup(g, h)) throw Error("core_in needs subgroups");
  if (!h.is_subset_of(k)) throw Error("core_in needs H <= K");
  const auto kg = generating_set(g, k);
  ElementSet c = h;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto x : kg) {
      ElementSet next = c & conjugate_set(g, c, x);
      if (!(next == c)) {
        c = std::move(next);
        changed = true;
      }
    }
  }
  return c;
}

ElementSet normal_closure_in(const CayleyGroup& g, const ElementSet& k, const ElementSet& h) {
  const auto kg = generating_set(g, k);
  ElementSet s = generated_subgroup(g, h);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto x : kg) {
      ElementSet conj = conjugate_set(g, s, x);
      if (!conj.is_subset_of(s)) {
        s = generated_subgroup(g, s | conj);
        changed = true;
      }
    }
  }
  return s;
}

ElementSet derived_subgroup(const CayleyGroup& g, const ElementSet& h) {
  ElementSet seed(g.order());
  const auto xs = h.indices();
  for (auto a : xs)
    for (auto b : xs) seed.set(g.mul(g.mul(g.inverse(a), g.inverse(b)), g.mul(a, b)));
  return generated_subgroup(g, seed);
}

ElementSet center(const CayleyGroup& g) {
  ElementSet z(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (auto s : g.generators())
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    if (central) z.set(x);
  }
  return z;
}

bool is_soluble(const CayleyGroup& g) {
  ElementSet cur = g.all();
  while (cur.count() > 1) {
    ElementSet next = derived_subgroup(g, cur);
    if (next == cur) return false;
    cur = std::move(next);
  }
  return true;
}

bool is_nilpotent(const CayleyGroup& g) {
  // upper central series: x in Z_{i+1} iff [x, s] in Z_i for all generators s
  ElementSet z = g.trivial();
  while (z.count() < g.order()) {
    ElementSet next(g.order());
    for (Element x = 0; x < g.order(); ++x) {
      bool ok = true;
      for (auto s : g.generators()) {
        const Element comm = g.mul(g.mul(g.inverse(x), g.inverse(s)), g.mul(x, s));
        if (!z.test(comm)) {
          ok = false;
          break;
        }
      }
      if (ok) next.set(x);
    }
    if (next == z) return false;
    z = std::move(next);
  }
  return true;
}

bool is_associative(const CayleyGroup& g) {
  const auto n = static_cast<Element>(g.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element ab = g.mul(a, b);
      for (Element c = 0; c < n; ++c)
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) return false;
    }
  return true;
}

}  // namespace sigma
