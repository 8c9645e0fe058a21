#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "macring/abelian_group.hpp"
#include "macring/cohomology.hpp"
#include "macring/cohomology_engine.hpp"
#include "macring/simplicial_complex.hpp"
#include "macring/subset.hpp"

namespace macring {

// Independent additive answer for the bigraded cohomology, assembled purely
// from simplicial cochain matrices of full subcomplexes:
//
//   H^{(-i, 2j)}  =  ⊕_{|omega| = j}  H~^{j-i-1}(K_omega; Z).
//
// Reduced cohomology of the empty full subcomplex contributes H~^{-1} = Z,
// which is what ghost vertices produce on the algebra side.
struct OracleContribution {
  Subset omega;
  int degree;  // reduced cohomological degree j - i - 1
  AbelianGroup group;
};

struct OracleReport {
  std::map<Bidegree, AbelianGroup> groups;        // nontrivial entries only
  std::vector<OracleContribution> contributions;  // nontrivial, omega in (card, lex) order
};

inline OracleReport oracle_report(const SimplicialComplex& k) {
  OracleReport rep;
  std::map<Bidegree, std::pair<int, std::vector<Int>>> acc;
  for (Subset omega : subsets_sorted(full_set(k.m()))) {
    auto sub = k.full_subcomplex(omega);
    ReducedCochainComplex cc(sub.complex);
    int j = card(omega);
    for (int d = -1; d <= cc.dim(); ++d) {
      AbelianGroup g = cc.reduced_cohomology(d);
      if (g.trivial()) continue;
      int i = j - d - 1;
      if (i < 0) throw InternalError("oracle_report: cohomology above the top dimension");
      auto& slot = acc[{i, j}];
      slot.first += g.rank;
      for (const Int& t : g.torsion) slot.second.push_back(t);
      rep.contributions.push_back({omega, d, std::move(g)});
    }
  }
  for (auto& [bd, slot] : acc) {
    AbelianGroup g = AbelianGroup::from_parts(slot.first, std::move(slot.second));
    if (!g.trivial()) rep.groups.emplace(bd, std::move(g));
  }
  return rep;
}

inline AbelianGroup oracle_bigraded(const SimplicialComplex& k, int i, int j) {
  if (i < 0 || j < 0 || j > k.m()) return {};
  int rank = 0;
  std::vector<Int> torsion;
  for (Subset omega : subsets_sorted(full_set(k.m()))) {
    if (card(omega) != j) continue;
    auto sub = k.full_subcomplex(omega);
    AbelianGroup g = ReducedCochainComplex(sub.complex).reduced_cohomology(j - i - 1);
    rank += g.rank;
    for (Int& t : g.torsion) torsion.push_back(std::move(t));
  }
  return AbelianGroup::from_parts(rank, std::move(torsion));
}

struct Mismatch {
  Bidegree bd;
  AbelianGroup engine;
  AbelianGroup oracle;
};

// Bidegree-by-bidegree comparison of the algebraic engine against the
// subcomplex oracle; empty result means full agreement.
inline std::vector<Mismatch> compare_engine_with_oracle(const SimplicialComplex& k) {
  BigradedTable tbl = bigraded_cohomology(k);
  OracleReport oracle = oracle_report(k);
  std::map<Bidegree, std::pair<AbelianGroup, AbelianGroup>> sides;
  for (const auto& [bd, comp] : tbl.entries)
    if (!comp.group.trivial()) sides[bd].first = comp.group;
  for (const auto& [bd, g] : oracle.groups) sides[bd].second = g;
  std::vector<Mismatch> out;
  for (auto& [bd, pair] : sides)
    if (!(pair.first == pair.second)) out.push_back({bd, pair.first, pair.second});
  return out;
}

}  // namespace macring
