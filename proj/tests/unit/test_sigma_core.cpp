#include <doctest.h>

#include "fixtures.hpp"
#include "sigma/catalog.hpp"
#include "sigma/error.hpp"
#include "sigma/sigma_core.hpp"
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

TEST_CASE("Hall subgroups agree with order search") {
  for (const auto& spec : fixture::small_zoo()) {
    const auto g = make_family(spec);
    const SubgroupLattice lat(g);
    const auto subs = oracle::subgroups(g);
    for (const auto& sigma : partitions_of(g)) {
      CAPTURE(g.name());
      CAPTURE(sigma.text());
      const auto cls = to_oracle(sigma);
      for (auto c : sigma.sigma_of(g.order())) {
        const std::vector<ClassId> pi{c};
        const auto got = hall_subgroups(lat, sigma, pi);
        std::set<oracle::Set> want;
        for (auto& h : oracle::hall(subs, g.order(), cls, cls.of(c))) want.insert(h);
        std::set<oracle::Set> have;
        for (auto h : got) have.insert(fixture::to_set(lat.elements(h)));
        CHECK(have == want);
      }
    }
  }
}

TEST_CASE("sigma-bases of S3 under the minimal partition") {
  const auto s3 = make_family(NamedFamilySpec::symmetric(3));
  const SubgroupLattice lat(s3);
  const auto bases = sigma_bases(lat, SigmaPartition::minimal());
  CHECK(bases.size() == 3);
  CHECK(bases.size() == oracle::count_sigma_bases(s3, oracle::subgroups(s3), oracle::minimal_classes()));
}

TEST_CASE("sigma-basis counts agree with brute force") {
  for (const auto& spec : fixture::small_zoo()) {
    const auto g = make_family(spec);
    const SubgroupLattice lat(g);
    const auto subs = oracle::subgroups(g);
    for (const auto& sigma : partitions_of(g)) {
      CAPTURE(g.name());
      CAPTURE(sigma.text());
      CHECK(sigma_bases(lat, sigma).size() == oracle::count_sigma_bases(g, subs, to_oracle(sigma)));
    }
  }
}

TEST_CASE("A5 lacks a Hall subgroup for the class {2,5}") {
  const auto a5 = make_family(NamedFamilySpec::alternating(5));
  const SubgroupLattice lat(a5);
  CHECK_FALSE(is_sigma_group(lat, parse_partition("2,5|3")));
  CHECK(is_sigma_group(lat, parse_partition("2,3|5")));
  CHECK(is_sigma_group(lat, SigmaPartition::minimal()));
  CHECK_FALSE(is_sigma_soluble(lat, SigmaPartition::minimal()));
  CHECK(is_sigma_soluble(lat, SigmaPartition::one()));
  const auto w = is_sigma_dispersive(lat, SigmaPartition::one());
  REQUIRE(w.has_value());
  CHECK(verify_dispersive_witness(lat, SigmaPartition::one(), *w));
}

TEST_CASE("dispersiveness of S3 depends on the ordering") {
  const auto s3 = make_family(NamedFamilySpec::symmetric(3));
  const SubgroupLattice lat(s3);
  const auto sigma = SigmaPartition::minimal();
  const auto w = is_sigma_dispersive(lat, sigma, std::vector<ClassId>{3, 2});
  REQUIRE(w.has_value());
  CHECK(w->series.size() == 3);
  CHECK(lat.order(w->series[1]) == 3);
  CHECK(verify_dispersive_witness(lat, sigma, *w));
  CHECK_FALSE(is_sigma_dispersive(lat, sigma, std::vector<ClassId>{2, 3}).has_value());
  CHECK_THROWS_AS(is_sigma_dispersive(lat, sigma, std::vector<ClassId>{2, 5}), Error);
  CHECK(has_sylow_tower(lat));
}

TEST_CASE("S4 has no Sylow tower") {
  const auto s4 = make_family(NamedFamilySpec::symmetric(4));
  const SubgroupLattice lat(s4);
  CHECK_FALSE(has_sylow_tower(lat));
  CHECK(is_sigma_soluble(lat, SigmaPartition::minimal()));
}

TEST_CASE("sigma-dispersive and sigma-nilpotent agree with brute force") {
  for (const auto& spec : fixture::small_zoo()) {
    const auto g = make_family(spec);
    const SubgroupLattice lat(g);
    const auto subs = oracle::subgroups(g);
    for (const auto& sigma : partitions_of(g)) {
      CAPTURE(g.name());
      CAPTURE(sigma.text());
      const auto cls = to_oracle(sigma);
      const auto w = is_sigma_dispersive(lat, sigma);
      CHECK(w.has_value() == oracle::dispersive(g, subs, cls));
      if (w) CHECK(verify_dispersive_witness(lat, sigma, *w));
      CHECK(is_sigma_nilpotent(lat, sigma) == oracle::sigma_nilpotent(g, subs, cls));
    }
  }
}

TEST_CASE("sigma-solubility from chief factors") {
  for (const auto& spec : fixture::small_zoo()) {
    const auto g = make_family(spec);
    const SubgroupLattice lat(g);
    const auto factors = oracle::chief_factor_orders(g, oracle::subgroups(g));
    for (const auto& sigma : partitions_of(g)) {
      const auto cls = to_oracle(sigma);
      bool want = true;
      for (auto f : factors) want = want && cls.primary(f);
      CHECK(is_sigma_soluble(lat, sigma) == want);
    }
  }
}

TEST_CASE("a tampered witness is rejected") {
  const auto s3 = make_family(NamedFamilySpec::symmetric(3));
  const SubgroupLattice lat(s3);
  auto w = is_sigma_dispersive(lat, SigmaPartition::minimal());
  REQUIRE(w.has_value());
  auto bad = *w;
  std::swap(bad.series[1], bad.series[0]);
  CHECK_FALSE(verify_dispersive_witness(lat, SigmaPartition::minimal(), bad).ok);
  bad = *w;
  // swap in a non-normal subgroup of order 2 as the first term
  for (NodeId i = 0; i < lat.size(); ++i)
    if (lat.order(i) == 2) bad.series[1] = i;
  CHECK_FALSE(verify_dispersive_witness(lat, SigmaPartition::minimal(), bad).ok);
}
