#pragma once

#include <bit>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "macring/koszul_dga.hpp"
#include "macring/linear_combo.hpp"
#include "macring/simplicial_complex.hpp"
#include "macring/subset.hpp"

namespace macring {

// Monomial u_omega v^a of the full Koszul algebra E_m = Λ[u_1..u_m] ⊗ Z[v_1..v_m],
// with d(u_i) = v_i, d(v_i) = 0.  R*(K) is the quotient by v_i^2 = u_i v_i = 0
// and the face-ring relations; rho / iota / homotopy_s realize the retraction.
struct EMonomial {
  Subset omega = 0;
  std::vector<int> exps;  // exponent of v_i at position i-1

  int m() const { return static_cast<int>(exps.size()); }

  Subset support() const {
    Subset s = 0;
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] > 0) s |= Subset{1} << i;
    return s;
  }

  int total_degree() const {
    int d = card(omega);
    for (int e : exps) d += 2 * e;
    return d;
  }

  // Square-free in the v's and u/v supports disjoint: the image of iota.
  bool reduced() const {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] > 1) return false;
      if (exps[i] == 1 && (omega & (Subset{1} << i))) return false;
    }
    return true;
  }

  friend bool operator==(const EMonomial&, const EMonomial&) = default;
  friend bool operator<(const EMonomial& a, const EMonomial& b) {
    if (a.omega != b.omega) return a.omega < b.omega;
    return a.exps < b.exps;
  }

  std::string str() const {
    std::string out;
    if (omega) out += "u" + subset_str(omega);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      out += "v" + std::to_string(i + 1);
      if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
    }
    return out.empty() ? "1" : out;
  }
};

using EChain = LinearCombo<EMonomial>;

inline EMonomial e_unit(int m) { return {0, std::vector<int>(static_cast<std::size_t>(m), 0)}; }

namespace detail {
inline void check_same_m(const EChain& x, int m) {
  for (const auto& [mono, c] : x.terms())
    if (mono.m() != m) throw std::invalid_argument("E_m element with mixed ground sets");
}
}  // namespace detail

// d extended from d(u_i) = v_i as a derivation: the t-th u-factor (ascending)
// contributes with sign (-1)^(t-1).
inline EChain e_differential(const EChain& x) {
  EChain out;
  for (const auto& [mono, c] : x.terms()) {
    int t = 0;
    for (Subset rem = mono.omega; rem; rem &= rem - 1, ++t) {
      int v = std::countr_zero(rem) + 1;
      EMonomial nm = mono;
      nm.omega &= ~single(v);
      ++nm.exps[static_cast<std::size_t>(v - 1)];
      out.add(nm, t % 2 ? -c : c);
    }
  }
  return out;
}

// K-quotient of E_m by the ideal of monomials whose v-support is a non-face.
inline EChain project_to_face_ring(const SimplicialComplex& k, const EChain& x) {
  EChain out;
  for (const auto& [mono, c] : x.terms())
    if (k.is_face(mono.support())) out.add(mono, c);
  return out;
}

inline EChain e_differential_mod(const SimplicialComplex& k, const EChain& x) {
  return project_to_face_ring(k, e_differential(x));
}

inline EChain e_multiply(const EChain& x, const EChain& y) {
  EChain out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      if (a.m() != b.m()) throw std::invalid_argument("e_multiply: mixed ground sets");
      if (a.omega & b.omega) continue;
      EMonomial nm{a.omega | b.omega, a.exps};
      for (std::size_t i = 0; i < nm.exps.size(); ++i) nm.exps[i] += b.exps[i];
      out.add(nm, ca * cb * koszul_sign(a.omega, b.omega));
    }
  return out;
}

// Projection rho: E_m (or its K-quotient) -> R*(K).  Non-reduced monomials
// and non-faces die; a reduced u_omega v^a maps to u_omega v_{supp a}.
inline ChainElement rho(const SimplicialComplex& k, const EChain& x) {
  ChainElement out;
  for (const auto& [mono, c] : x.terms()) {
    if (!mono.reduced()) continue;
    Subset supp = mono.support();
    if (!k.is_face(supp)) continue;
    out.add({mono.omega, supp}, c);
  }
  return out;
}

// Additive inclusion iota: u_omega v_sigma -> u_omega v^{1_sigma}; a section
// of rho but not a ring map.
inline EChain iota(const ChainElement& x, int m) {
  EChain out;
  for (const auto& [mono, c] : x.terms()) {
    if ((mono.omega | mono.sigma) & ~full_set(m))
      throw std::invalid_argument("iota: monomial outside [m]");
    EMonomial nm = e_unit(m);
    nm.omega = mono.omega;
    for (Subset t = mono.sigma; t; t &= t - 1) nm.exps[static_cast<std::size_t>(std::countr_zero(t))] = 1;
    out.add(nm, c);
  }
  return out;
}

namespace detail {

// Cochain homotopy with d s + s d = id - iota rho, built coordinate by
// coordinate: s_1 kills the v_k-tail past degree one and parks a u_k,
//   s_1(a_0 + a_1 v + ... + a_j v^j) = (a_2 v + ... + a_j v^{j-1}) u,
// and s_k = s_{k-1} ⊗ id + (iota rho)_{k-1} ⊗ s_1.  Evaluating the second
// summand on x' ⊗ v_k^j crosses the odd operator s_1 past x', which costs
// the Koszul sign (-1)^{deg x'}.
inline EChain s_rec(int k, const EMonomial& x) {
  if (k == 0) return {};
  const bool has_u = contains(x.omega, k);
  const int jexp = x.exps[static_cast<std::size_t>(k - 1)];
  EMonomial head = x;
  head.omega &= ~single(k);
  head.exps[static_cast<std::size_t>(k - 1)] = 0;

  EChain out;
  EChain tail = s_rec(k - 1, head);
  for (const auto& [z, c] : tail.terms()) {
    EMonomial w = z;
    if (has_u) w.omega |= single(k);
    w.exps[static_cast<std::size_t>(k - 1)] = jexp;
    out.add(w, c);
  }
  if (!has_u && jexp >= 2 && head.reduced()) {
    EMonomial w = head;
    w.omega |= single(k);
    w.exps[static_cast<std::size_t>(k - 1)] = jexp - 1;
    out.add(w, head.total_degree() % 2 ? -1 : 1);
  }
  return out;
}

}  // namespace detail

inline EChain homotopy_s(int m, const EChain& x) {
  detail::check_same_m(x, m);
  EChain out;
  for (const auto& [mono, c] : x.terms()) out += c * detail::s_rec(m, mono);
  return out;
}

// E_m monomials of total degree <= bound, in deterministic order.
inline std::vector<EMonomial> e_basis(int m, int bound) {
  std::vector<EMonomial> out;
  std::vector<int> exps(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto&& self, Subset omega, int pos, int left) -> void {
    if (pos == m) {
      out.push_back({omega, exps});
      return;
    }
    for (int e = 0; 2 * e <= left; ++e) {
      exps[static_cast<std::size_t>(pos)] = e;
      self(self, omega, pos + 1, left - 2 * e);
    }
    exps[static_cast<std::size_t>(pos)] = 0;
  };
  Subset om = 0;
  while (true) {
    if (card(om) <= bound) rec(rec, om, 0, bound - card(om));
    if (om == full_set(m)) break;
    ++om;
  }
  return out;
}

// Same, restricted to the K-quotient (v-support a face of K).
inline std::vector<EMonomial> e_basis_mod(const SimplicialComplex& k, int bound) {
  std::vector<EMonomial> out;
  for (EMonomial& x : e_basis(k.m(), bound))
    if (k.is_face(x.support())) out.push_back(std::move(x));
  return out;
}

}  // namespace macring
