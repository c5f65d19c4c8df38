#include "sigma/families.hpp"

#include <array>

#include "sigma/error.hpp"

namespace sigma {

namespace {

Permutation cycle_on(std::size_t degree, std::size_t from, std::size_t to) {
  // the cycle (from+1 ... to) in 1-based notation
  std::vector<std::uint32_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = from; i < to; ++i)
    images[i] = static_cast<std::uint32_t>(i + 1 == to ? from : i + 1);
  return Permutation(std::move(images));
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t k = 2; k <= n; ++k) r *= k;
  return r;
}

std::uint64_t param(const NamedFamilySpec& spec, std::size_t i, const char* what) {
  if (spec.params.size() <= i) throw Error(std::string("missing parameter for ") + what);
  return spec.params[i];
}

// SL(2,3) acting on the eight nonzero column vectors of F_3^2.
GeneratorList sl23_generators() {
  std::vector<std::array<int, 2>> vectors;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (x || y) vectors.push_back({x, y});
  auto index_of = [&](std::array<int, 2> v) {
    for (std::size_t i = 0; i < vectors.size(); ++i)
      if (vectors[i] == v) return static_cast<std::uint32_t>(i);
    throw Error("vector not found");
  };
  auto act = [&](std::array<int, 4> m) {
    std::vector<std::uint32_t> images;
    for (const auto& v : vectors)
      images.push_back(index_of({(m[0] * v[0] + m[1] * v[1]) % 3, (m[2] * v[0] + m[3] * v[1]) % 3}));
    return Permutation(std::move(images));
  };
  // two transvections generate SL(2,3)
  return {"SL(2,3)", 8, 24, {act({1, 1, 0, 1}), act({1, 0, 1, 1})}};
}

}  // namespace

std::vector<std::string> GeneratorList::cycle_strings() const {
  std::vector<std::string> out;
  for (const auto& g : generators) out.push_back(g.to_cycle_string());
  return out;
}

std::string family_name(const NamedFamilySpec& spec) {
  switch (spec.family) {
    case Family::cyclic: return "C" + std::to_string(param(spec, 0, "cyclic"));
    case Family::dihedral: return "D" + std::to_string(2 * param(spec, 0, "dihedral"));
    case Family::symmetric: return "S" + std::to_string(param(spec, 0, "symmetric"));
    case Family::alternating: return "A" + std::to_string(param(spec, 0, "alternating"));
    case Family::quaternion: return "Q8";
    case Family::modular_p:
      return "M(" + std::to_string(param(spec, 0, "modular_p")) + "," +
             std::to_string(param(spec, 1, "modular_p")) + ")";
    case Family::special_linear_2_3: return "SL(2,3)";
    case Family::direct_product:
      if (spec.factors.size() != 2) throw Error("direct_product needs two factors");
      return family_name(spec.factors[0]) + "x" + family_name(spec.factors[1]);
    case Family::from_generators: return "perm";
  }
  return "?";
}

GeneratorList family_generators(const NamedFamilySpec& spec) {
  GeneratorList out;
  out.name = family_name(spec);
  switch (spec.family) {
    case Family::cyclic: {
      const auto n = param(spec, 0, "cyclic");
      if (n < 1) throw Error("cyclic(n) needs n >= 1");
      out.degree = n;
      out.order = n;
      if (n > 1) out.generators.push_back(cycle_on(n, 0, n));
      return out;
    }
    case Family::dihedral: {
      const auto n = param(spec, 0, "dihedral");
      if (n < 2) throw Error("dihedral(n) needs n >= 2");
      out.order = 2 * n;
      if (n == 2) {
        out.degree = 4;
        out.generators = {parse_permutation("(1 2)", 4), parse_permutation("(3 4)", 4)};
        return out;
      }
      out.degree = n;
      std::vector<std::uint32_t> reflection(n);
      for (std::size_t i = 0; i < n; ++i) reflection[i] = static_cast<std::uint32_t>(n - 1 - i);
      out.generators = {cycle_on(n, 0, n), Permutation(std::move(reflection))};
      return out;
    }
    case Family::symmetric: {
      const auto n = param(spec, 0, "symmetric");
      if (n < 1 || n > 7) throw Error("symmetric(n) needs 1 <= n <= 7");
      out.degree = n;
      out.order = factorial(n);
      if (n >= 2) out.generators.push_back(cycle_on(n, 0, 2));
      if (n >= 3) out.generators.push_back(cycle_on(n, 0, n));
      return out;
    }
    case Family::alternating: {
      const auto n = param(spec, 0, "alternating");
      if (n < 1 || n > 7) throw Error("alternating(n) needs 1 <= n <= 7");
      out.degree = n;
      out.order = n < 2 ? 1 : factorial(n) / 2;
      if (n >= 3) out.generators.push_back(cycle_on(n, 0, 3));
      if (n >= 4) out.generators.push_back(n % 2 ? cycle_on(n, 0, n) : cycle_on(n, 1, n));
      return out;
    }
    case Family::quaternion:
      out.degree = 8;
      out.order = 8;
      out.generators = {parse_permutation("(1 2 3 4)(5 6 7 8)", 8),
                        parse_permutation("(1 5 3 7)(2 8 4 6)", 8)};
      return out;
    case Family::modular_p: {
      const auto p = param(spec, 0, "modular_p");
      const auto m = param(spec, 1, "modular_p");
      if (!is_prime(p)) throw Error("modular_p needs a prime p");
      if (m < 3) throw Error("modular_p needs m >= 3");
      if (ipow(p, static_cast<int>(m)) > 100000) throw Error("modular_p order too large");
      // a: x -> x + 1 and b: x -> r x on Z/p^(m-1), r = 1 + p^(m-2)
      const std::uint64_t n = ipow(p, static_cast<int>(m - 1));
      const std::uint64_t r = 1 + ipow(p, static_cast<int>(m - 2));
      std::vector<std::uint32_t> shift(n), scale(n);
      for (std::uint64_t x = 0; x < n; ++x) {
        shift[x] = static_cast<std::uint32_t>((x + 1) % n);
        scale[x] = static_cast<std::uint32_t>((r * x) % n);
      }
      out.degree = n;
      out.order = n * p;
      out.generators = {Permutation(std::move(shift)), Permutation(std::move(scale))};
      return out;
    }
    case Family::special_linear_2_3:
      return sl23_generators();
    case Family::direct_product: {
      if (spec.factors.size() != 2) throw Error("direct_product needs two factors");
      const auto a = family_generators(spec.factors[0]);
      const auto b = family_generators(spec.factors[1]);
      out.degree = a.degree + b.degree;
      out.order = a.order * b.order;
      for (const auto& g : a.generators) out.generators.push_back(g.padded(out.degree));
      for (const auto& g : b.generators) out.generators.push_back(g.shifted(a.degree, out.degree));
      return out;
    }
    case Family::from_generators:
      if (spec.degree == 0) throw Error("from_generators needs a positive degree");
      out.degree = spec.degree;
      out.order = 0;
      for (const auto& text : spec.generators)
        out.generators.push_back(parse_permutation(text, spec.degree));
      return out;
  }
  throw Error("unknown family");
}

CayleyGroup make_family(const NamedFamilySpec& spec, std::size_t order_cap) {
  const auto gens = family_generators(spec);
  if (gens.order > order_cap)
    throw CapExceeded(gens.name + " has order " + std::to_string(gens.order) + " above cap",
                      gens.order);
  return group_from_generators(gens.generators, order_cap, gens.name, gens.degree);
}

const char* to_string(PGroupType t) {
  switch (t) {
    case PGroupType::cyclic: return "cyclic";
    case PGroupType::cyclic_times_p: return "cyclic_times_p";
    case PGroupType::modular: return "modular";
    case PGroupType::quaternion: return "quaternion";
    case PGroupType::other: return "other";
  }
  return "?";
}

PGroupType classify_p_group(const CayleyGroup& g) {
  const std::size_t n = g.order();
  const auto pp = as_prime_power(n);
  if (pp.prime == 0) throw Error("classify_p_group needs a group of prime-power order");
  if (n == 1) return PGroupType::cyclic;
  const std::uint64_t p = pp.prime;

  std::vector<std::size_t> orders(n);
  std::size_t exponent = 1;
  for (Element x = 0; x < n; ++x) {
    orders[x] = g.element_order(x);
    exponent = std::max(exponent, orders[x]);
  }
  if (exponent == n) return PGroupType::cyclic;

  const bool abelian = g.is_abelian();
  if (abelian && exponent * p == n) return PGroupType::cyclic_times_p;

  if (!abelian && pp.exponent >= 3) {
    const auto m = pp.exponent;
    const std::size_t a_order = ipow(p, m - 1);
    const std::uint64_t r = 1 + ipow(p, m - 2);
    for (Element a = 0; a < n; ++a) {
      if (orders[a] != a_order) continue;
      Element a_r = 0;
      for (std::uint64_t k = 0; k < r; ++k) a_r = g.mul(a_r, a);
      const ElementSet span = cyclic_subgroup(g, a);
      for (Element b = 0; b < n; ++b) {
        if (orders[b] != p || span.test(b)) continue;
        if (g.conjugate(a, b) == a_r) return PGroupType::modular;
      }
    }
  }

  if (!abelian && n == 8) {
    std::size_t involutions = 0;
    for (auto o : orders) involutions += (o == 2);
    if (involutions == 1) return PGroupType::quaternion;
  }
  return PGroupType::other;
}

}  // namespace sigma
