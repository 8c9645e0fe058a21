#pragma once

#include <bit>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "macring/linear_combo.hpp"
#include "macring/simplicial_complex.hpp"
#include "macring/subset.hpp"

namespace macring {

// Basis monomial u_omega v_sigma of the finite quotient DGA R*(K):
// omega, sigma ⊆ [m] disjoint and sigma a face of K.  Bidegree (-i, 2j) with
// i = |omega|, j = |omega| + |sigma|; topological degree 2j - i.
struct Monomial {
  Subset omega = 0;
  Subset sigma = 0;

  int i() const { return card(omega); }
  int j() const { return card(omega) + card(sigma); }
  int total_degree() const { return card(omega) + 2 * card(sigma); }
  bool unit() const { return !omega && !sigma; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Canonical basis order: lex on sigma, then lex on omega.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.sigma != b.sigma) return subset_lex_less(a.sigma, b.sigma);
    return subset_lex_less(a.omega, b.omega);
  }

  std::string str() const {
    if (unit()) return "1";
    std::string out;
    if (omega) out += "u" + subset_str(omega);
    if (sigma) out += "v" + subset_str(sigma);
    return out;
  }
};

struct Bidegree {
  int i = 0;  // exterior degree: the monomial has bidegree (-i, 2j)
  int j = 0;

  int total_degree() const { return 2 * j - i; }
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
  std::string str() const {
    return "(" + std::to_string(-i) + "," + std::to_string(2 * j) + ")";
  }
};

inline Bidegree bidegree_of(const Monomial& x) { return {x.i(), x.j()}; }

using ChainElement = LinearCombo<Monomial>;

inline bool is_admissible(const SimplicialComplex& k, const Monomial& x) {
  return (x.omega & x.sigma) == 0 && (x.omega | x.sigma) <= full_set(k.m()) && k.is_face(x.sigma);
}

// Bidegree of a homogeneous element; rejects mixed or zero input.
inline Bidegree homogeneous_bidegree(const ChainElement& x) {
  if (x.zero()) throw std::invalid_argument("homogeneous_bidegree: zero element");
  Bidegree bd = bidegree_of(x.terms().begin()->first);
  for (const auto& [mono, c] : x.terms())
    if (bidegree_of(mono) != bd)
      throw std::invalid_argument("homogeneous_bidegree: element is not homogeneous");
  return bd;
}

// All basis monomials of R*(K), grouped by bidegree in canonical order.
class KoszulBasis {
 public:
  explicit KoszulBasis(const SimplicialComplex& k) {
    for (Subset sigma : k.faces()) {
      Subset rest = full_set(k.m()) & ~sigma;
      Subset om = rest;
      while (true) {
        Monomial mono{om, sigma};
        buckets_[bidegree_of(mono)].push_back(mono);
        if (om == 0) break;
        om = (om - 1) & rest;
      }
    }
    for (auto& [bd, list] : buckets_) {
      std::sort(list.begin(), list.end());
      auto& idx = index_[bd];
      for (std::size_t p = 0; p < list.size(); ++p) idx.emplace(list[p], static_cast<int>(p));
      total_ += list.size();
    }
  }

  const std::map<Bidegree, std::vector<Monomial>>& by_bidegree() const { return buckets_; }

  const std::vector<Monomial>& at(Bidegree bd) const {
    static const std::vector<Monomial> empty;
    auto it = buckets_.find(bd);
    return it == buckets_.end() ? empty : it->second;
  }

  int index_of(Bidegree bd, const Monomial& x) const {
    auto it = index_.find(bd);
    if (it == index_.end()) return -1;
    auto jt = it->second.find(x);
    return jt == it->second.end() ? -1 : jt->second;
  }

  std::size_t total() const { return total_; }

  std::vector<Monomial> flatten() const {
    std::vector<Monomial> out;
    out.reserve(total_);
    for (const auto& [bd, list] : buckets_) out.insert(out.end(), list.begin(), list.end());
    return out;
  }

 private:
  std::map<Bidegree, std::vector<Monomial>> buckets_;
  std::map<Bidegree, std::map<Monomial, int>> index_;
  std::size_t total_ = 0;
};

// d(u_omega v_sigma) = sum over the t-th vertex i_t of omega (ascending) of
// (-1)^(t-1) u_{omega \ i_t} v_{sigma ∪ i_t}, keeping only targets whose
// sigma ∪ i_t is a face.  Input must be homogeneous.
inline ChainElement differential(const SimplicialComplex& k, const ChainElement& x) {
  if (x.zero()) return {};
  homogeneous_bidegree(x);
  ChainElement out;
  for (const auto& [mono, c] : x.terms()) {
    int t = 0;
    for (Subset rem = mono.omega; rem; rem &= rem - 1, ++t) {
      int v = std::countr_zero(rem) + 1;
      Subset ns = mono.sigma | single(v);
      if (!k.is_face(ns)) continue;
      out.add({mono.omega & ~single(v), ns}, t % 2 ? -c : c);
    }
  }
  return out;
}

// u_a v_s * u_b v_t = ±u_{a∪b} v_{s∪t} when all four index sets are pairwise
// disjoint and s∪t ∈ K, zero otherwise; the sign counts inversions between
// the two omega sets.
inline ChainElement multiply(const SimplicialComplex& k, const Monomial& a, const Monomial& b) {
  if ((a.omega | a.sigma) & (b.omega | b.sigma)) return {};
  Subset sg = a.sigma | b.sigma;
  if (!k.is_face(sg)) return {};
  return ChainElement::term({a.omega | b.omega, sg}, koszul_sign(a.omega, b.omega));
}

inline ChainElement multiply(const SimplicialComplex& k, const ChainElement& x,
                             const ChainElement& y) {
  ChainElement out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      ChainElement prod = multiply(k, a, b);
      for (const auto& [mono, s] : prod.terms()) out.add(mono, ca * cb * s);
    }
  return out;
}

// R*(L) -> R*(K) for a subcomplex K ⊆ L on the same ground set: kill the
// monomials whose sigma is no longer a face.
inline ChainElement restrict_to_subcomplex(const SimplicialComplex& sub,
                                           const SimplicialComplex& ambient,
                                           const ChainElement& x) {
  if (!ambient.contains_subcomplex(sub))
    throw std::invalid_argument("restrict_to_subcomplex: first complex is not a subcomplex");
  ChainElement out;
  for (const auto& [mono, c] : x.terms())
    if (sub.is_face(mono.sigma)) out.add(mono, c);
  return out;
}

}  // namespace macring
