#include <doctest.h>

#include "fixtures.hpp"
#include "sigma/catalog.hpp"
#include "sigma/subnormality.hpp"
#include "sigma/witness_check.hpp"

using namespace sigma;

namespace {

oracle::Classes to_oracle(const SigmaPartition& s) {
  if (s.is_one()) return oracle::one_class();
  return oracle::classes_of(s.listed_classes());
}

std::vector<SigmaPartition> partitions_of(const CayleyGroup& g) {
  const auto ps = g.primes();
  return prime_partitions(std::set<std::uint64_t>(ps.begin(), ps.end()));
}

}  // namespace

TEST_CASE("a transposition does not generate a subnormal subgroup of S4") {
  const auto s4 = make_family(NamedFamilySpec::symmetric(4));
  Element t = 0;
  for (Element x = 0; x < s4.order(); ++x)
    if (s4.perm(x).to_cycle_string() == "(1 2)") t = x;
  REQUIRE(t != 0);
  const auto h = cyclic_subgroup(s4, t);
  CHECK_FALSE(is_subnormal(s4, h));
  CHECK_FALSE(oracle::subnormal(s4, oracle::subgroups(s4), fixture::to_set(h)));
  const SubgroupLattice lat(s4);
  CHECK_FALSE(is_sigma_subnormal(lat, SigmaPartition::minimal(), h).has_value());
  CHECK(is_sigma_subnormal(lat, parse_partition("2,3"), h).has_value());
}

TEST_CASE("plain subnormality agrees with brute force") {
  for (const auto& spec : fixture::small_zoo()) {
    const auto g = make_family(spec);
    const auto subs = oracle::subgroups(g);
    CAPTURE(g.name());
    for (const auto& h : subs)
      CHECK(is_subnormal(g, fixture::to_bits(g, h)) == oracle::subnormal(g, subs, h));
  }
}

TEST_CASE("sigma-subnormality in G agrees with definitional reachability") {
  for (const auto& spec : fixture::small_zoo()) {
    const auto g = make_family(spec);
    const SubgroupLattice lat(g);
    const StepTable table(lat);
    const auto subs = oracle::subgroups(g);
    for (const auto& sigma : partitions_of(g)) {
      CAPTURE(g.name());
      CAPTURE(sigma.text());
      const SubnormalityMap map(table, sigma);
      const auto cls = to_oracle(sigma);
      for (NodeId h = 0; h < lat.size(); ++h) {
        const auto hs = fixture::to_set(lat.elements(h));
        const bool want = oracle::sigma_subnormal(g, subs, cls, hs, oracle::whole(g));
        REQUIRE(map.is_sigma_subnormal(h) == want);
        if (!want) continue;
        const auto w = map.witness(h);
        REQUIRE(w.has_value());
        CHECK(w->chain.front() == h);
        CHECK(w->chain.back() == lat.top());
        CHECK(static_cast<int>(w->step_kinds.size()) == map.distance(h));
        CHECK(verify_subnormal_witness(lat, sigma, h, lat.top(), *w));
      }
    }
  }
}

TEST_CASE("sigma-subnormality inside a subgroup") {
  const auto g = make_family(NamedFamilySpec::symmetric(4));
  const SubgroupLattice lat(g);
  const StepTable table(lat);
  const auto subs = oracle::subgroups(g);
  const auto sigma = SigmaPartition::minimal();
  for (NodeId k = 0; k < lat.size(); ++k) {
    const SubnormalityMap map(table, sigma, k);
    const auto ks = fixture::to_set(lat.elements(k));
    for (NodeId h = 0; h < lat.size(); ++h) {
      if (!lat.contains(k, h)) continue;
      const auto hs = fixture::to_set(lat.elements(h));
      CHECK(map.is_sigma_subnormal(h) ==
            oracle::sigma_subnormal(g, subs, oracle::minimal_classes(), hs, ks));
      if (const auto w = map.witness(h)) CHECK(verify_subnormal_witness(lat, sigma, h, k, *w));
    }
  }
}

TEST_CASE("pinned m_sigma values") {
  using S = NamedFamilySpec;
  const auto s4 = make_family(S::symmetric(4));
  CHECK(m_sigma(SubgroupLattice(s4), SigmaPartition::minimal()) == 4);
  const auto c6 = make_family(S::cyclic(6));
  CHECK(m_sigma(SubgroupLattice(c6), SigmaPartition::minimal()) == 1);
  const auto c1 = make_family(S::cyclic(1));
  CHECK(m_sigma(SubgroupLattice(c1), SigmaPartition::minimal()) == 0);
}

TEST_CASE("m_sigma agrees with brute force") {
  for (const auto& spec : fixture::small_zoo()) {
    const auto g = make_family(spec);
    const SubgroupLattice lat(g);
    const auto subs = oracle::subgroups(g);
    for (const auto& sigma : partitions_of(g)) {
      CAPTURE(g.name());
      CAPTURE(sigma.text());
      CHECK(m_sigma(lat, sigma) == oracle::m_sigma(g, subs, to_oracle(sigma)));
    }
  }
}

TEST_CASE("irreducible pairs") {
  const auto g = make_family(NamedFamilySpec::symmetric(4));
  const SubgroupLattice lat(g);
  for (NodeId a = 0; a < lat.size(); ++a)
    for (NodeId b = 0; b < lat.size(); ++b) {
      const auto as = fixture::to_set(lat.elements(a));
      const auto bs = fixture::to_set(lat.elements(b));
      bool want = oracle::permutable(g, as, bs);
      if (want) {
        const auto ab = oracle::product(g, as, bs);
        want = as.size() < ab.size();
        for (const auto& l : oracle::subgroups(g))
          if (l.size() > as.size() && l.size() < ab.size() && oracle::subset(as, l) &&
              oracle::subset(l, ab))
            want = false;
      }
      CHECK(is_irreducible_pair(lat, a, b) == want);
    }
}

TEST_CASE("tampered subnormal witnesses are rejected") {
  const auto g = make_family(NamedFamilySpec::symmetric(4));
  const SubgroupLattice lat(g);
  const StepTable table(lat);
  const SubnormalityMap map(table, SigmaPartition::minimal());
  NodeId v4 = 0;
  for (NodeId i = 0; i < lat.size(); ++i)
    if (lat.order(i) == 4 && lat.is_normal(i)) v4 = i;
  REQUIRE(v4 != 0);
  auto w = map.witness(0);
  REQUIRE(w.has_value());
  CHECK(verify_subnormal_witness(lat, SigmaPartition::minimal(), 0, lat.top(), *w));
  auto bad = *w;
  bad.chain.back() = v4;
  CHECK_FALSE(verify_subnormal_witness(lat, SigmaPartition::minimal(), 0, lat.top(), bad).ok);
  bad = *w;
  bad.step_kinds.pop_back();
  CHECK_FALSE(verify_subnormal_witness(lat, SigmaPartition::minimal(), 0, lat.top(), bad).ok);
}
