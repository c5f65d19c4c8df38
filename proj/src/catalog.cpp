#include "sigma/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "sigma/error.hpp"
#include "sigma/families.hpp"

namespace sigma {

using nlohmann::json;

namespace {

CatalogEntry entry_from_family(const NamedFamilySpec& spec, std::vector<std::string> tags) {
  const auto gens = family_generators(spec);
  return {gens.name, gens.degree, gens.cycle_strings(), gens.order, std::move(tags)};
}

const char* family_tag(Family f) {
  switch (f) {
    case Family::cyclic: return "cyclic";
    case Family::dihedral: return "dihedral";
    case Family::symmetric: return "symmetric";
    case Family::alternating: return "alternating";
    case Family::quaternion: return "quaternion";
    case Family::modular_p: return "modular";
    case Family::special_linear_2_3: return "sl23";
    case Family::direct_product: return "product";
    case Family::from_generators: return "perm";
  }
  return "?";
}

CatalogEntry entry_from_json(const json& j) {
  CatalogEntry e;
  e.name = j.at("name").get<std::string>();
  e.degree = j.at("degree").get<std::size_t>();
  e.generators = j.at("generators").get<std::vector<std::string>>();
  if (j.contains("expected_order") && !j.at("expected_order").is_null())
    e.expected_order = j.at("expected_order").get<std::size_t>();
  if (j.contains("tags")) e.tags = j.at("tags").get<std::vector<std::string>>();
  if (e.degree == 0) throw Error("degree must be positive");
  return e;
}

}  // namespace

std::vector<CatalogEntry> builtin_catalog(std::size_t max_order) {
  std::vector<NamedFamilySpec> base;
  for (std::uint64_t n = 2; n <= max_order; ++n) base.push_back(NamedFamilySpec::cyclic(n));
  for (std::uint64_t n = 2; 2 * n <= max_order; ++n) base.push_back(NamedFamilySpec::dihedral(n));
  for (std::uint64_t n = 3; n <= 5; ++n) base.push_back(NamedFamilySpec::symmetric(n));
  for (std::uint64_t n = 4; n <= 5; ++n) base.push_back(NamedFamilySpec::alternating(n));
  base.push_back(NamedFamilySpec::quaternion());
  for (std::uint64_t p = 2; ipow(p, 3) <= max_order; ++p) {
    if (!is_prime(p)) continue;
    for (std::uint64_t m = 3; ipow(p, static_cast<int>(m)) <= max_order; ++m)
      base.push_back(NamedFamilySpec::modular(p, m));
  }
  base.push_back(NamedFamilySpec::sl23());

  std::vector<std::pair<NamedFamilySpec, std::size_t>> fitting;
  for (auto& spec : base) {
    const auto order = family_generators(spec).order;
    if (order <= max_order) fitting.emplace_back(spec, order);
  }

  std::map<std::string, CatalogEntry> by_name;
  auto add = [&](CatalogEntry e) { by_name.try_emplace(e.name, std::move(e)); };
  add(entry_from_family(NamedFamilySpec::cyclic(1), {"cyclic"}));
  for (const auto& [spec, order] : fitting) add(entry_from_family(spec, {family_tag(spec.family)}));
  for (std::size_t i = 0; i < fitting.size(); ++i)
    for (std::size_t j = i; j < fitting.size(); ++j) {
      if (fitting[i].second * fitting[j].second > max_order) continue;
      add(entry_from_family(NamedFamilySpec::product(fitting[i].first, fitting[j].first),
                            {"product"}));
    }

  std::vector<CatalogEntry> out;
  out.reserve(by_name.size());
  for (auto& [name, e] : by_name) out.push_back(std::move(e));
  std::stable_sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return a.expected_order.value_or(0) < b.expected_order.value_or(0);
  });
  return out;
}

CatalogLoad parse_catalog(std::string_view text, std::size_t order_cap) {
  CatalogLoad out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;

    CatalogEntry entry;
    try {
      entry = entry_from_json(json::parse(line));
    } catch (const std::exception& ex) {
      out.errors.push_back({line_no, "", std::string("parse failure: ") + ex.what()});
      continue;
    }
    try {
      (void)materialize(entry, order_cap);
    } catch (const std::exception& ex) {
      out.errors.push_back({line_no, entry.name, ex.what()});
      continue;
    }
    out.entries.push_back(std::move(entry));
  }
  return out;
}

CatalogLoad load_catalog(const std::string& path, std::size_t order_cap) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open catalog '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_catalog(buffer.str(), order_cap);
}

std::string to_json_line(const CatalogEntry& entry) {
  json j;
  j["name"] = entry.name;
  j["degree"] = entry.degree;
  j["generators"] = entry.generators;
  if (entry.expected_order) j["expected_order"] = *entry.expected_order;
  if (!entry.tags.empty()) j["tags"] = entry.tags;
  return j.dump();
}

std::string serialize_catalog(const std::vector<CatalogEntry>& entries) {
  std::string out;
  for (const auto& e : entries) out += to_json_line(e) + "\n";
  return out;
}

CayleyGroup materialize(const CatalogEntry& entry, std::size_t order_cap) {
  std::vector<Permutation> gens;
  for (const auto& text : entry.generators) gens.push_back(parse_permutation(text, entry.degree));
  auto g = group_from_generators(gens, order_cap, entry.name, entry.degree);
  if (entry.expected_order && *entry.expected_order != g.order())
    throw Error(entry.name + ": expected order " + std::to_string(*entry.expected_order) +
                " but closure has order " + std::to_string(g.order()));
  return g;
}

std::vector<SigmaPartition> prime_partitions(const std::set<std::uint64_t>& primes,
                                             std::size_t max_primes) {
  if (primes.size() > max_primes)
    throw CapExceeded("too many primes for partition enumeration", primes.size());
  const std::vector<std::uint64_t> ps(primes.begin(), primes.end());
  const std::size_t n = ps.size();
  std::vector<SigmaPartition> out;
  if (n == 0) {
    out.push_back(SigmaPartition::minimal());
    return out;
  }
  // restricted growth strings a[0] = 0, a[i] <= 1 + max(a[0..i-1])
  std::vector<std::size_t> a(n, 0);
  while (true) {
    std::size_t blocks = *std::max_element(a.begin(), a.end()) + 1;
    std::vector<std::vector<std::uint64_t>> classes(blocks);
    for (std::size_t i = 0; i < n; ++i) classes[a[i]].push_back(ps[i]);
    out.push_back(SigmaPartition::from_classes(std::move(classes)));

    std::size_t i = n;
    while (i > 1) {
      --i;
      const std::size_t prefix_max = *std::max_element(a.begin(), a.begin() + static_cast<long>(i));
      if (a[i] <= prefix_max) {
        ++a[i];
        std::fill(a.begin() + static_cast<long>(i) + 1, a.end(), 0);
        break;
      }
      if (i == 1) return out;
    }
    if (n == 1) return out;
  }
}

}  // namespace sigma
