#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "macring/abelian_group.hpp"
#include "macring/cohomology.hpp"
#include "macring/errors.hpp"
#include "macring/int_matrix.hpp"
#include "macring/koszul_dga.hpp"
#include "macring/simplicial_complex.hpp"
#include "macring/subset.hpp"

namespace macring {

struct EngineOptions {
  bool representatives = false;
  // The differential preserves the total support S = omega ∪ sigma, so every
  // bidegree splits block-diagonally over the |S| = j supports; this is the
  // default execution path.  The monolithic per-bidegree path is kept as a
  // cross-check.
  bool support_decomposition = true;
};

struct Generator {
  Bidegree bd;
  Int order;  // 0 = infinite
  ChainElement cocycle;
};

class BigradedComponent {
 public:
  struct Block {
    std::optional<Subset> support;   // nullopt on the monolithic path
    std::vector<int> global_indices; // ascending positions in `basis`
    CohomologyData data;
  };

  Bidegree bd;
  std::vector<Monomial> basis;  // canonical (sigma, omega) lex order
  AbelianGroup group;
  bool has_representatives = false;
  std::vector<Generator> generators;

  std::vector<Block> blocks;
  std::map<Monomial, int> index;
  std::map<Subset, std::size_t> block_of_support;  // empty on the monolithic path

  // Generator coordinates of a cocycle in this bidegree; torsion coordinates
  // land in [0, order).
  std::vector<Int> coordinates_of(const ChainElement& z) const {
    if (!has_representatives) throw InternalError("coordinates_of: representatives not computed");
    std::vector<std::vector<Int>> local(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b)
      local[b].assign(blocks[b].global_indices.size(), Int(0));
    for (const auto& [mono, c] : z.terms()) {
      auto it = index.find(mono);
      if (it == index.end())
        throw std::invalid_argument("coordinates_of: " + mono.str() + " is outside bidegree " +
                                    bd.str());
      std::size_t b = 0;
      if (!block_of_support.empty()) b = block_of_support.at(mono.omega | mono.sigma);
      const auto& gi = blocks[b].global_indices;
      auto pos = std::lower_bound(gi.begin(), gi.end(), it->second);
      if (pos == gi.end() || *pos != it->second)
        throw InternalError("coordinates_of: block index table is inconsistent");
      local[b][static_cast<std::size_t>(pos - gi.begin())] = c;
    }
    std::vector<Int> out;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      std::vector<Int> part = blocks[b].data.coordinates_of(local[b]);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
};

class BigradedTable {
 public:
  SimplicialComplex complex;
  EngineOptions options;
  std::map<Bidegree, BigradedComponent> entries;

  static const AbelianGroup& trivial_group() {
    static const AbelianGroup g;
    return g;
  }

  const AbelianGroup& group_at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? trivial_group() : it->second.group;
  }
};

namespace detail {

// d restricted to one support S: level i holds the faces sigma ⊆ S with
// |sigma| = |S| - i (so omega = S \ sigma), listed in lex order.
inline IntMatrix level_differential(const SimplicialComplex& k,
                                   const std::vector<Subset>& src,
                                   const std::vector<Subset>& dst, Subset support) {
  IntMatrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
  std::map<Subset, int> dst_index;
  for (std::size_t p = 0; p < dst.size(); ++p) dst_index.emplace(dst[p], static_cast<int>(p));
  for (std::size_t c = 0; c < src.size(); ++c) {
    Subset sigma = src[c];
    Subset omega = support & ~sigma;
    int t = 0;
    for (Subset rem = omega; rem; rem &= rem - 1, ++t) {
      int v = std::countr_zero(rem) + 1;
      Subset ns = sigma | single(v);
      if (!k.is_face(ns)) continue;
      auto it = dst_index.find(ns);
      if (it == dst_index.end()) throw InternalError("level_differential: missing target face");
      m.add_at(it->second, static_cast<int>(c), t % 2 ? -1 : 1);
    }
  }
  return m;
}

}  // namespace detail

inline BigradedTable bigraded_cohomology(const SimplicialComplex& k,
                                         const EngineOptions& opts = {}) {
  BigradedTable tbl;
  tbl.complex = k;
  tbl.options = opts;

  KoszulBasis basis(k);
  for (const auto& [bd, list] : basis.by_bidegree()) {
    auto& comp = tbl.entries[bd];
    comp.bd = bd;
    comp.basis = list;
    for (std::size_t p = 0; p < list.size(); ++p) comp.index.emplace(list[p], static_cast<int>(p));
  }

  if (opts.support_decomposition) {
    for (Subset support : subsets_sorted(full_set(k.m()))) {
      int sc = card(support);
      std::vector<std::vector<Subset>> level(static_cast<std::size_t>(sc) + 1);
      for (Subset f : k.faces())
        if ((f & ~support) == 0) level[static_cast<std::size_t>(sc - card(f))].push_back(f);
      std::vector<IntMatrix> dmat(static_cast<std::size_t>(sc) + 1);
      for (int i = 1; i <= sc; ++i)
        dmat[static_cast<std::size_t>(i)] = detail::level_differential(
            k, level[static_cast<std::size_t>(i)], level[static_cast<std::size_t>(i - 1)], support);
      for (int i = 0; i <= sc; ++i) {
        const auto& mid = level[static_cast<std::size_t>(i)];
        if (mid.empty()) continue;
        IntMatrix d_in = i + 1 <= sc ? dmat[static_cast<std::size_t>(i + 1)]
                                     : IntMatrix(static_cast<int>(mid.size()), 0);
        IntMatrix d_out = i >= 1 ? dmat[static_cast<std::size_t>(i)]
                                 : IntMatrix(0, static_cast<int>(mid.size()));
        auto& comp = tbl.entries.at({i, sc});
        BigradedComponent::Block blk;
        blk.support = support;
        for (Subset sigma : mid)
          blk.global_indices.push_back(comp.index.at(Monomial{support & ~sigma, sigma}));
        blk.data = cohomology_at(d_in, d_out, opts.representatives);
        comp.block_of_support.emplace(support, comp.blocks.size());
        comp.blocks.push_back(std::move(blk));
      }
    }
  } else {
    for (auto& [bd, comp] : tbl.entries) {
      const auto& mid = comp.basis;
      const auto& src = basis.at({bd.i + 1, bd.j});
      const auto& dst = basis.at({bd.i - 1, bd.j});
      IntMatrix d_in(static_cast<int>(mid.size()), static_cast<int>(src.size()));
      for (std::size_t c = 0; c < src.size(); ++c) {
        ChainElement dx = differential(k, ChainElement::term(src[c]));
        for (const auto& [mono, coef] : dx.terms())
          d_in.add_at(comp.index.at(mono), static_cast<int>(c), coef);
      }
      IntMatrix d_out(static_cast<int>(dst.size()), static_cast<int>(mid.size()));
      if (!dst.empty()) {
        Bidegree below{bd.i - 1, bd.j};
        const auto& below_index = tbl.entries.at(below).index;
        for (std::size_t c = 0; c < mid.size(); ++c) {
          ChainElement dx = differential(k, ChainElement::term(mid[c]));
          for (const auto& [mono, coef] : dx.terms())
            d_out.add_at(below_index.at(mono), static_cast<int>(c), coef);
        }
      }
      BigradedComponent::Block blk;
      blk.global_indices.resize(mid.size());
      for (std::size_t p = 0; p < mid.size(); ++p) blk.global_indices[p] = static_cast<int>(p);
      blk.data = cohomology_at(d_in, d_out, opts.representatives);
      comp.blocks.push_back(std::move(blk));
    }
  }

  for (auto& [bd, comp] : tbl.entries) {
    int rank = 0;
    std::size_t covered = 0;
    std::vector<Int> torsion;
    for (const auto& blk : comp.blocks) {
      rank += blk.data.group.rank;
      covered += blk.global_indices.size();
      for (const Int& t : blk.data.group.torsion) torsion.push_back(t);
    }
    if (covered != comp.basis.size())
      throw InternalError("bigraded_cohomology: blocks do not cover the basis");
    comp.group = AbelianGroup::from_parts(rank, std::move(torsion));
    if (opts.representatives) {
      comp.has_representatives = true;
      for (const auto& blk : comp.blocks)
        for (std::size_t g = 0; g < blk.data.representatives.size(); ++g) {
          Generator gen;
          gen.bd = bd;
          gen.order = blk.data.orders[g];
          for (std::size_t p = 0; p < blk.global_indices.size(); ++p) {
            const Int& coef = blk.data.representatives[g][p];
            if (coef != 0)
              gen.cocycle.add(comp.basis[static_cast<std::size_t>(blk.global_indices[p])], coef);
          }
          comp.generators.push_back(std::move(gen));
        }
    }
  }
  return tbl;
}

struct PoincareSeries {
  std::map<int, Int> coefficients;  // degree -> rank of H^degree, nonzero only

  bool operator==(const PoincareSeries&) const = default;

  std::string str() const {
    if (coefficients.empty()) return "0";
    std::string out;
    for (const auto& [n, c] : coefficients) {
      if (!out.empty()) out += " + ";
      if (n == 0) {
        out += c.str();
        continue;
      }
      if (c != 1) out += c.str();
      out += "t";
      if (n != 1) out += "^" + std::to_string(n);
    }
    return out;
  }
};

inline PoincareSeries poincare_series(const BigradedTable& tbl) {
  PoincareSeries s;
  for (const auto& [bd, comp] : tbl.entries) {
    if (comp.group.rank == 0) continue;
    s.coefficients[bd.total_degree()] += comp.group.rank;
  }
  return s;
}

// Product of cohomology classes given by generator coordinates; the result
// is in the coordinates of the target bidegree (empty if that group has no
// generators).  Multiplies representatives in R*(K) and reduces back, so an
// irreducible product means a broken invariant, not bad input.
inline std::vector<Int> cup_on_cohomology(const BigradedTable& tbl, Bidegree da,
                                          const std::vector<Int>& ca, Bidegree db,
                                          const std::vector<Int>& cb) {
  auto build = [&tbl](Bidegree bd, const std::vector<Int>& coords) -> ChainElement {
    auto it = tbl.entries.find(bd);
    if (it == tbl.entries.end()) {
      if (!coords.empty())
        throw std::invalid_argument("cup_on_cohomology: coordinates for an empty bidegree");
      return {};
    }
    const auto& comp = it->second;
    if (!comp.has_representatives)
      throw InternalError("cup_on_cohomology: table built without representatives");
    if (coords.size() != comp.generators.size())
      throw std::invalid_argument("cup_on_cohomology: coordinate length mismatch");
    ChainElement z;
    for (std::size_t g = 0; g < coords.size(); ++g)
      z += coords[g] * comp.generators[g].cocycle;
    return z;
  };
  ChainElement prod = multiply(tbl.complex, build(da, ca), build(db, cb));
  Bidegree target{da.i + db.i, da.j + db.j};
  auto it = tbl.entries.find(target);
  if (it == tbl.entries.end()) {
    if (!prod.zero()) throw InternalError("cup_on_cohomology: product escaped the table");
    return {};
  }
  return it->second.coordinates_of(prod);
}

// Full multiplicative presentation: one generator per invariant-factor
// summand across all bidegrees, plus the coordinates of every pairwise
// product.  Generator order: bidegrees ascending in (i, j), then the
// per-bidegree order (torsion ascending, then free).
struct RingPresentation {
  BigradedTable table;
  std::vector<Generator> generators;
  std::vector<std::pair<Bidegree, int>> positions;  // (bidegree, slot) per generator
  std::map<std::pair<int, int>, std::vector<Int>> products;
};

inline RingPresentation ring_presentation(const SimplicialComplex& k) {
  RingPresentation rp;
  EngineOptions opts;
  opts.representatives = true;
  rp.table = bigraded_cohomology(k, opts);
  for (const auto& [bd, comp] : rp.table.entries)
    for (std::size_t g = 0; g < comp.generators.size(); ++g) {
      rp.generators.push_back(comp.generators[g]);
      rp.positions.emplace_back(bd, static_cast<int>(g));
    }
  const int n = static_cast<int>(rp.generators.size());
  auto unit_coords = [&rp](int g) {
    auto [bd, slot] = rp.positions[static_cast<std::size_t>(g)];
    std::vector<Int> coords(rp.table.entries.at(bd).generators.size(), Int(0));
    coords[static_cast<std::size_t>(slot)] = 1;
    return std::make_pair(bd, coords);
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto [bda, ca] = unit_coords(a);
      auto [bdb, cb] = unit_coords(b);
      rp.products[{a, b}] = cup_on_cohomology(rp.table, bda, ca, bdb, cb);
    }
  return rp;
}

}  // namespace macring
