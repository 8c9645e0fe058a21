#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "macring/abelian_group.hpp"
#include "macring/cohomology_engine.hpp"
#include "macring/errors.hpp"
#include "macring/integer.hpp"
#include "macring/simplicial_complex.hpp"
#include "macring/subset.hpp"
#include "macring/verify.hpp"

// JSON serialization with the "macring/1" schema tag, plus plain-text table
// renderers for the CLI.  All emitters walk ordered containers, so output is
// byte-identical across runs.

namespace macring {

inline const char* kSchemaTag = "macring/1";

inline nlohmann::json torsion_to_json(const std::vector<Int>& torsion) {
  nlohmann::json out = nlohmann::json::array();
  for (const Int& t : torsion) out.push_back(to_int64_checked(t));
  return out;
}

// {"schema":"macring/1","m":M,"entries":[{"i":I,"j2":2J,"rank":R,"torsion":[...]},...]}
// with entries sorted by (i, j2) and trivial groups omitted.
inline nlohmann::json betti_to_json(const BigradedTable& tbl) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [bd, comp] : tbl.entries) {
    if (comp.group.trivial()) continue;
    entries.push_back({{"i", bd.i},
                       {"j2", 2 * bd.j},
                       {"rank", comp.group.rank},
                       {"torsion", torsion_to_json(comp.group.torsion)}});
  }
  return {{"schema", kSchemaTag}, {"m", tbl.complex.m()}, {"entries", entries}};
}

struct BettiData {
  int m = 0;
  std::map<Bidegree, AbelianGroup> groups;
  bool operator==(const BettiData&) const = default;
};

inline BettiData betti_data(const BigradedTable& tbl) {
  BettiData d;
  d.m = tbl.complex.m();
  for (const auto& [bd, comp] : tbl.entries)
    if (!comp.group.trivial()) d.groups.emplace(bd, comp.group);
  return d;
}

inline BettiData betti_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("schema") || doc["schema"] != kSchemaTag)
    throw ParseError("betti document: missing schema tag " + std::string(kSchemaTag));
  BettiData d;
  d.m = doc.at("m").get<int>();
  for (const auto& e : doc.at("entries")) {
    int i = e.at("i").get<int>();
    int j2 = e.at("j2").get<int>();
    if (j2 % 2) throw ParseError("betti document: odd j2");
    std::vector<Int> torsion;
    for (const auto& t : e.at("torsion")) torsion.push_back(Int(t.get<long long>()));
    d.groups.emplace(Bidegree{i, j2 / 2}, AbelianGroup::from_parts(e.at("rank").get<int>(), torsion));
  }
  return d;
}

inline std::string betti_table_text(const BigradedTable& tbl) {
  std::string out = "bidegree (-i,2j)   degree   group\n";
  bool any = false;
  for (const auto& [bd, comp] : tbl.entries) {
    if (comp.group.trivial()) continue;
    any = true;
    std::string bds = bd.str();
    bds.resize(bds.size() < 18 ? 18 : bds.size(), ' ');
    std::string deg = std::to_string(bd.total_degree());
    deg.resize(deg.size() < 8 ? 8 : deg.size(), ' ');
    out += bds + " " + deg + " " + comp.group.str() + "\n";
  }
  if (!any) out += "(all groups trivial)\n";
  return out;
}

// {"schema":"macring/1","suites":[{"name":S,"pass":B,"detail":D},...]}
inline nlohmann::json verify_to_json(const std::vector<SuiteResult>& suites) {
  nlohmann::json list = nlohmann::json::array();
  for (const SuiteResult& s : suites)
    list.push_back({{"name", s.name},
                    {"pass", s.pass},
                    {"detail", s.detail + " [" + std::to_string(s.checks) + " checks]"}});
  return {{"schema", kSchemaTag}, {"suites", list}};
}

inline std::string verify_table_text(const std::vector<SuiteResult>& suites) {
  std::string out;
  for (const SuiteResult& s : suites) {
    std::string name = s.name;
    name.resize(name.size() < 10 ? 10 : name.size(), ' ');
    out += (s.pass ? "PASS  " : "FAIL  ") + name + " " + s.detail + "\n";
  }
  return out;
}

inline nlohmann::json chain_to_json(const ChainElement& x) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [mono, c] : x.terms())
    out.push_back({{"c", to_int64_checked(c)},
                   {"omega", vertices(mono.omega)},
                   {"sigma", vertices(mono.sigma)}});
  return out;
}

// Generators with representative cocycles and the full multiplication table;
// "order" 0 means infinite order.
inline nlohmann::json ring_to_json(const RingPresentation& rp) {
  nlohmann::json gens = nlohmann::json::array();
  for (std::size_t g = 0; g < rp.generators.size(); ++g) {
    const Generator& gen = rp.generators[g];
    gens.push_back({{"id", static_cast<int>(g)},
                    {"i", gen.bd.i},
                    {"j2", 2 * gen.bd.j},
                    {"degree", gen.bd.total_degree()},
                    {"order", to_int64_checked(gen.order)},
                    {"cocycle", chain_to_json(gen.cocycle)}});
  }
  nlohmann::json prods = nlohmann::json::array();
  for (const auto& [ab, coords] : rp.products) {
    nlohmann::json cs = nlohmann::json::array();
    for (const Int& c : coords) cs.push_back(to_int64_checked(c));
    prods.push_back({{"left", ab.first}, {"right", ab.second}, {"coords", cs}});
  }
  return {{"schema", kSchemaTag},
          {"m", rp.table.complex.m()},
          {"generators", gens},
          {"products", prods}};
}

inline std::string ring_table_text(const RingPresentation& rp) {
  std::string out = "generators:\n";
  for (std::size_t g = 0; g < rp.generators.size(); ++g) {
    const Generator& gen = rp.generators[g];
    out += "  x" + std::to_string(g) + "  bidegree " + gen.bd.str() + "  degree " +
           std::to_string(gen.bd.total_degree()) + "  order " +
           (gen.order == 0 ? std::string("inf") : gen.order.str()) + "  [" +
           gen.cocycle.str() + "]\n";
  }
  // global id of the generator sitting at (bidegree, slot)
  std::map<std::pair<Bidegree, int>, std::size_t> global_id;
  for (std::size_t g = 0; g < rp.positions.size(); ++g) global_id.emplace(rp.positions[g], g);
  out += "nonzero products:\n";
  bool any = false;
  for (const auto& [ab, coords] : rp.products) {
    std::string sum;
    Bidegree target{rp.generators[static_cast<std::size_t>(ab.first)].bd.i +
                        rp.generators[static_cast<std::size_t>(ab.second)].bd.i,
                    rp.generators[static_cast<std::size_t>(ab.first)].bd.j +
                        rp.generators[static_cast<std::size_t>(ab.second)].bd.j};
    for (std::size_t p = 0; p < coords.size(); ++p) {
      if (coords[p] == 0) continue;
      if (!sum.empty()) sum += " + ";
      if (coords[p] != 1) sum += coords[p].str() + "*";
      auto it = global_id.find({target, static_cast<int>(p)});
      sum += it == global_id.end() ? "?" : "x" + std::to_string(it->second);
    }
    if (sum.empty()) continue;
    any = true;
    out += "  x" + std::to_string(ab.first) + " * x" + std::to_string(ab.second) + " = " + sum + "\n";
  }
  if (!any) out += "  (none)\n";
  return out;
}

// Cell census of Z_K by dimension, computed combinatorially: a sigma ∈ K
// contributes C(m - |sigma|, t) cells in dimension 2|sigma| + t.
inline std::map<int, Int> cell_census(const SimplicialComplex& k) {
  const int m = k.m();
  std::vector<std::vector<Int>> binom(static_cast<std::size_t>(m) + 1);
  for (int n = 0; n <= m; ++n) {
    binom[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, Int(1));
    for (int r = 1; r < n; ++r)
      binom[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)] =
          binom[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(r - 1)] +
          binom[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(r)];
  }
  std::map<int, Int> out;
  for (Subset f : k.faces()) {
    int c = card(f);
    for (int t = 0; t <= m - c; ++t)
      out[2 * c + t] += binom[static_cast<std::size_t>(m - c)][static_cast<std::size_t>(t)];
  }
  return out;
}

inline nlohmann::json cells_to_json(const SimplicialComplex& k) {
  auto census = cell_census(k);
  nlohmann::json list = nlohmann::json::array();
  Int euler = 0;
  for (const auto& [d, n] : census) {
    list.push_back({{"dim", d}, {"count", to_int64_checked(n)}});
    euler += d % 2 ? -n : n;
  }
  return {{"schema", kSchemaTag},
          {"m", k.m()},
          {"cells", list},
          {"euler", to_int64_checked(euler)}};
}

inline std::string cells_table_text(const SimplicialComplex& k) {
  auto census = cell_census(k);
  std::string out = "dim   cells\n";
  Int euler = 0, total = 0;
  for (const auto& [d, n] : census) {
    std::string ds = std::to_string(d);
    ds.resize(ds.size() < 5 ? 5 : ds.size(), ' ');
    out += ds + " " + n.str() + "\n";
    euler += d % 2 ? -n : n;
    total += n;
  }
  out += "total " + total.str() + ", euler characteristic " + euler.str() + "\n";
  return out;
}

}  // namespace macring
