#pragma once

#include <bit>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "macring/koszul_dga.hpp"
#include "macring/linear_combo.hpp"
#include "macring/simplicial_complex.hpp"
#include "macring/subset.hpp"

namespace macring {

// Product cell of (D²)^m in word form: disc factor D at the positions of
// sigma, circle factor T at the positions of omega, basepoint elsewhere.
// The cell lies in the moment-angle complex Z_K iff sigma is a face of K;
// its dimension is 2|sigma| + |omega|.
struct CellWord {
  Subset sigma = 0;
  Subset omega = 0;

  int dimension() const { return 2 * card(sigma) + card(omega); }

  friend bool operator==(const CellWord&, const CellWord&) = default;
  friend bool operator<(const CellWord& a, const CellWord& b) {
    if (a.sigma != b.sigma) return subset_lex_less(a.sigma, b.sigma);
    return subset_lex_less(a.omega, b.omega);
  }

  std::string str() const { return "T(" + subset_str(sigma) + "," + subset_str(omega) + ")"; }
};

using CellChain = LinearCombo<CellWord>;
using CellCochain = LinearCombo<CellWord>;

inline bool cell_in(const SimplicialComplex& k, const CellWord& w) {
  return (w.sigma & w.omega) == 0 && ((w.sigma | w.omega) & ~full_set(k.m())) == 0 &&
         k.is_face(w.sigma);
}

namespace detail {
inline void check_cochain(const SimplicialComplex& k, const CellCochain& x, const char* who) {
  for (const auto& [w, c] : x.terms())
    if (!cell_in(k, w))
      throw std::invalid_argument(std::string(who) + ": " + w.str() +
                                  " is not a cell of Z_K (wrong m or sigma not a face)");
}
}  // namespace detail

// Cells of Z_K by dimension.  Within one dimension the order is increasing
// |omega|, then lex on (sigma, omega): exactly the R*(K) basis order under
// the bijection u_omega v_sigma <-> dual cell of T(sigma, omega).
inline std::map<int, std::vector<CellWord>> cells(const SimplicialComplex& k) {
  std::map<int, std::vector<CellWord>> out;
  for (Subset sigma : k.faces()) {
    Subset rest = full_set(k.m()) & ~sigma;
    Subset om = rest;
    while (true) {
      CellWord w{sigma, om};
      out[w.dimension()].push_back(w);
      if (om == 0) break;
      om = (om - 1) & rest;
    }
  }
  for (auto& [d, list] : out)
    std::sort(list.begin(), list.end(), [](const CellWord& a, const CellWord& b) {
      if (card(a.omega) != card(b.omega)) return card(a.omega) < card(b.omega);
      return a < b;
    });
  return out;
}

// Cellular boundary from ∂D = T in each factor with tensor signs:
// ∂T(sigma, omega) = sum over i in sigma of (-1)^{|{p in omega : p < i}|}
// T(sigma \ i, omega ∪ i).  It never leaves Z_K, so no complex is needed.
inline CellChain boundary(const CellWord& w) {
  CellChain out;
  for (Subset t = w.sigma; t; t &= t - 1) {
    int i = std::countr_zero(t) + 1;
    int parity = std::popcount(w.omega & (single(i) - 1)) % 2;
    out.add({w.sigma & ~single(i), w.omega | single(i)}, parity ? -1 : 1);
  }
  return out;
}

inline CellChain boundary(const CellChain& x) {
  CellChain out;
  for (const auto& [w, c] : x.terms()) out += c * boundary(w);
  return out;
}

// Dual coboundary on cellular cochains of Z_K: transpose of the boundary,
// restricted to targets that are still cells of Z_K.
inline CellCochain coboundary(const SimplicialComplex& k, const CellCochain& x) {
  detail::check_cochain(k, x, "coboundary");
  CellCochain out;
  for (const auto& [w, c] : x.terms()) {
    for (Subset t = w.omega; t; t &= t - 1) {
      int i = std::countr_zero(t) + 1;
      Subset ns = w.sigma | single(i);
      if (!k.is_face(ns)) continue;
      int parity = std::popcount(w.omega & (single(i) - 1)) % 2;
      out.add({ns, w.omega & ~single(i)}, parity ? -c : c);
    }
  }
  return out;
}

// Cup product induced by the cellular diagonal approximation of (D²)^m whose
// factorwise diagonal never produces a T ⊗ T term on D.  Nonzero only for
// cells with disjoint total support whose sigma-union is a face; the sign is
// the same inversion count as in R*(K).
inline CellCochain cup(const SimplicialComplex& k, const CellCochain& x, const CellCochain& y) {
  detail::check_cochain(k, x, "cup");
  detail::check_cochain(k, y, "cup");
  CellCochain out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      if ((a.sigma | a.omega) & (b.sigma | b.omega)) continue;
      Subset ns = a.sigma | b.sigma;
      if (!k.is_face(ns)) continue;
      out.add({ns, a.omega | b.omega}, ca * cb * koszul_sign(a.omega, b.omega));
    }
  return out;
}

// The cochain-level isomorphism g: u_omega v_sigma -> dual of T(sigma, omega).
inline CellCochain iso_g(const SimplicialComplex& k, const ChainElement& x) {
  CellCochain out;
  for (const auto& [mono, c] : x.terms()) {
    if (!is_admissible(k, mono))
      throw std::invalid_argument("iso_g: " + mono.str() + " is not an R*(K) basis monomial");
    out.add({mono.sigma, mono.omega}, c);
  }
  return out;
}

inline ChainElement iso_g_inverse(const SimplicialComplex& k, const CellCochain& x) {
  detail::check_cochain(k, x, "iso_g_inverse");
  ChainElement out;
  for (const auto& [w, c] : x.terms()) out.add({w.omega, w.sigma}, c);
  return out;
}

// Restriction of polydisc cochains to Z_K: drop the cells outside.
inline CellCochain restrict_q(const SimplicialComplex& k, const CellCochain& x) {
  detail::check_cochain(full_simplex(k.m()), x, "restrict_q");
  CellCochain out;
  for (const auto& [w, c] : x.terms())
    if (k.is_face(w.sigma)) out.add(w, c);
  return out;
}

}  // namespace macring
