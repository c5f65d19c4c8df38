#include <doctest.h>

#include "fixtures.hpp"
#include "sigma/error.hpp"
#include "sigma/export.hpp"
#include "sigma/lattice.hpp"

using namespace sigma;

TEST_CASE("subgroup counts agree with naive closure") {
  for (const auto& spec : fixture::small_zoo()) {
    const auto g = make_family(spec);
    CAPTURE(g.name());
    const SubgroupLattice lat(g);
    const auto subs = oracle::subgroups(g);
    REQUIRE(lat.size() == subs.size());
    for (const auto& s : subs) CHECK(lat.find(fixture::to_bits(g, s)).has_value());
  }
}

TEST_CASE("pinned subgroup counts") {
  using S = NamedFamilySpec;
  CHECK(SubgroupLattice(make_family(S::symmetric(4))).size() == 30);
  CHECK(SubgroupLattice(make_family(S::quaternion())).size() == 6);
  CHECK(SubgroupLattice(make_family(S::symmetric(3))).size() == 6);
  CHECK(SubgroupLattice(make_family(S::cyclic(4))).size() == 3);
  CHECK(SubgroupLattice(make_family(S::alternating(5))).size() == 59);
}

TEST_CASE("canonical order, covers, normality and depths agree with brute force") {
  for (const auto& spec : fixture::small_zoo()) {
    const auto g = make_family(spec);
    CAPTURE(g.name());
    const SubgroupLattice lat(g);
    const auto subs = oracle::subgroups(g);
    CHECK(lat.order(lat.bottom()) == 1);
    CHECK(lat.order(lat.top()) == g.order());
    for (NodeId i = 0; i + 1 < lat.size(); ++i) {
      CHECK(lat.order(i) <= lat.order(i + 1));
      CHECK(canonical_less(lat.elements(i), lat.elements(i + 1)));
    }
    for (NodeId k = 0; k < lat.size(); ++k) {
      const auto ks = fixture::to_set(lat.elements(k));
      CHECK(lat.is_normal(k) == oracle::normal_in(g, oracle::whole(g), ks));
      std::set<oracle::Set> want;
      for (auto& h : oracle::maximal_in(subs, ks)) want.insert(h);
      std::set<oracle::Set> got;
      for (auto h : lat.maximal_subgroups(k)) got.insert(fixture::to_set(lat.elements(h)));
      CHECK(got == want);
      for (NodeId h = 0; h < lat.size(); ++h)
        CHECK(lat.contains(k, h) == oracle::subset(fixture::to_set(lat.elements(h)), ks));
    }
    for (unsigned n = 0; n <= lat.max_depth() + 1; ++n) {
      std::set<oracle::Set> got;
      for (auto h : lat.n_maximal_set(n)) got.insert(fixture::to_set(lat.elements(h)));
      CHECK(got == oracle::n_maximal(g, subs, n));
    }
  }
}

TEST_CASE("meet and join") {
  const auto g = make_family(NamedFamilySpec::symmetric(4));
  const SubgroupLattice lat(g);
  for (NodeId a = 0; a < lat.size(); ++a)
    for (NodeId b = 0; b < lat.size(); ++b) {
      const auto as = fixture::to_set(lat.elements(a));
      const auto bs = fixture::to_set(lat.elements(b));
      CHECK(fixture::to_set(lat.elements(lat.meet(a, b))) == oracle::intersect(as, bs));
      oracle::Set u = as;
      u.insert(u.end(), bs.begin(), bs.end());
      std::sort(u.begin(), u.end());
      CHECK(fixture::to_set(lat.elements(lat.join(a, b))) == oracle::closure(g, u));
    }
}

TEST_CASE("chief series and rank") {
  using S = NamedFamilySpec;
  const auto s4 = make_family(S::symmetric(4));
  const SubgroupLattice lat(s4);
  const auto cs = chief_series(lat);
  CHECK(cs.factor_orders == std::vector<std::size_t>{4, 3, 2});
  CHECK(rank(lat) == 2);
  for (const auto& spec : fixture::small_zoo()) {
    const auto g = make_family(spec);
    const SubgroupLattice l(g);
    auto want = oracle::chief_factor_orders(g, oracle::subgroups(g));
    auto got = chief_series(l).factor_orders;
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    CAPTURE(g.name());
    CHECK(got == want);
  }
  const auto a5 = make_family(S::alternating(5));
  CHECK_THROWS_AS(rank(SubgroupLattice(a5)), Error);
  CHECK(chief_series(SubgroupLattice(a5)).factor_orders == std::vector<std::size_t>{60});
}

TEST_CASE("Frattini subgroups") {
  using S = NamedFamilySpec;
  auto phi = [](const NamedFamilySpec& spec) {
    const auto g = make_family(spec);
    const SubgroupLattice lat(g);
    return lat.order(frattini_subgroup(lat));
  };
  CHECK(phi(S::quaternion()) == 2);
  CHECK(phi(S::cyclic(8)) == 4);
  CHECK(phi(S::dihedral(4)) == 2);
  CHECK(phi(S::symmetric(4)) == 1);
  CHECK(phi(S::cyclic(1)) == 1);
  CHECK(phi(S::sl23()) == 2);
}

TEST_CASE("lattice cap") {
  const auto a5 = make_family(NamedFamilySpec::alternating(5));
  CHECK_THROWS_AS(SubgroupLattice(a5, 50), CapExceeded);
}

TEST_CASE("DOT export") {
  using S = NamedFamilySpec;
  auto count = [](const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
      ++n;
    return n;
  };
  const auto c4 = make_family(S::cyclic(4));
  const auto dot = lattice_to_dot(SubgroupLattice(c4));
  CHECK(count(dot, "[label=") == 3);
  CHECK(count(dot, " -> ") == 2);
  CHECK(count(dot, "doublecircle") == 3);
  const auto s3 = make_family(S::symmetric(3));
  CHECK(count(lattice_to_dot(SubgroupLattice(s3)), "[label=") == 6);
  const auto s4 = make_family(S::symmetric(4));
  const SubgroupLattice l4(s4);
  CHECK(count(lattice_to_dot(l4), "[label=") == 30);
  CHECK(lattice_to_dot(l4) == lattice_to_dot(SubgroupLattice(s4)));
  CHECK(lattice_to_json(l4).find("\"subgroups\": 30") != std::string::npos);
}
