#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "macring/cellular_model.hpp"
#include "macring/cohomology_engine.hpp"
#include "macring/hochster.hpp"
#include "macring/koszul_dga.hpp"
#include "macring/koszul_e.hpp"
#include "macring/simplicial_complex.hpp"

namespace macring {

// One verification suite: named, pass/fail, a human-readable detail line and
// the number of individual checks it ran.  Reused by the CLI `verify`
// command and by the test binaries.
struct SuiteResult {
  std::string name;
  bool pass = true;
  std::size_t checks = 0;
  std::string detail;

  void fail(const std::string& what) {
    pass = false;
    if (detail.empty()) detail = what;
  }
};

// Engine vs. subcomplex oracle over every bidegree.
inline SuiteResult verify_hochster(const SimplicialComplex& k) {
  SuiteResult r;
  r.name = "hochster";
  auto mismatches = compare_engine_with_oracle(k);
  BigradedTable tbl = bigraded_cohomology(k);
  r.checks = tbl.entries.size();
  if (!mismatches.empty()) {
    const auto& m = mismatches.front();
    r.fail("bidegree " + m.bd.str() + ": engine " + m.engine.str() + " vs oracle " +
           m.oracle.str() + " (" + std::to_string(mismatches.size()) + " mismatching bidegrees)");
    return r;
  }
  r.detail = std::to_string(r.checks) + " bidegrees agree with the subcomplex oracle";
  return r;
}

// d s + s d = id - iota rho on every monomial of total degree <= bound, both
// in the full algebra E_m and in the K-quotient.  bound < 0 selects 2m + 2.
inline SuiteResult verify_homotopy(const SimplicialComplex& k, int bound = -1) {
  SuiteResult r;
  r.name = "homotopy";
  const int m = k.m();
  if (bound < 0) bound = 2 * m + 2;
  SimplicialComplex full = full_simplex(m);

  for (const EMonomial& x : e_basis(m, bound)) {
    EChain cx = EChain::term(x);
    EChain lhs = e_differential(homotopy_s(m, cx)) + homotopy_s(m, e_differential(cx));
    EChain rhs = cx - iota(rho(full, cx), m);
    ++r.checks;
    if (!(lhs == rhs)) {
      r.fail("E_m identity fails on " + x.str());
      return r;
    }
  }
  for (const EMonomial& x : e_basis_mod(k, bound)) {
    EChain cx = EChain::term(x);
    EChain lhs = e_differential_mod(k, homotopy_s(m, cx)) + homotopy_s(m, e_differential_mod(k, cx));
    EChain rhs = cx - iota(rho(k, cx), m);
    ++r.checks;
    if (!(lhs == rhs)) {
      r.fail("quotient identity fails on " + x.str());
      return r;
    }
  }
  r.detail = std::to_string(r.checks) + " homotopy identities through degree " +
             std::to_string(bound);
  return r;
}

namespace detail {

inline const Monomial& pick(const std::vector<Monomial>& basis, std::mt19937_64& rng) {
  return basis[static_cast<std::size_t>(rng() % basis.size())];
}

}  // namespace detail

// The cellular comparison: g intertwines d with the cellular coboundary, g is
// multiplicative for the diagonal-approximation cup product, and the square
// q ∘ f = g ∘ p commutes.  Exhaustive over basis elements / pairs for m <= 4,
// and additionally on random pairs for larger m.
inline SuiteResult verify_diagonal(const SimplicialComplex& k, std::uint64_t seed = 20240901,
                                   std::size_t random_pairs = 10000) {
  SuiteResult r;
  r.name = "diagonal";
  const int m = k.m();
  SimplicialComplex full = full_simplex(m);
  std::vector<Monomial> basis_k = KoszulBasis(k).flatten();
  std::vector<Monomial> basis_full = KoszulBasis(full).flatten();
  const bool exhaustive = m <= 4;

  auto check_chain_map = [&](const Monomial& x) {
    ChainElement cx = ChainElement::term(x);
    ++r.checks;
    if (!(iso_g(k, differential(k, cx)) == coboundary(k, iso_g(k, cx)))) {
      r.fail("g does not intertwine d on " + x.str());
      return false;
    }
    return true;
  };
  auto check_product = [&](const Monomial& a, const Monomial& b) {
    ChainElement pa = ChainElement::term(a), pb = ChainElement::term(b);
    ++r.checks;
    if (!(iso_g(k, multiply(k, pa, pb)) == cup(k, iso_g(k, pa), iso_g(k, pb)))) {
      r.fail("g is not multiplicative on " + a.str() + ", " + b.str());
      return false;
    }
    return true;
  };
  auto check_square = [&](const Monomial& x) {
    ChainElement cx = ChainElement::term(x);
    ++r.checks;
    if (!(restrict_q(k, iso_g(full, cx)) == iso_g(k, restrict_to_subcomplex(k, full, cx)))) {
      r.fail("q∘f != g∘p on " + x.str());
      return false;
    }
    return true;
  };

  if (exhaustive) {
    for (const Monomial& x : basis_k)
      if (!check_chain_map(x)) return r;
    for (const Monomial& a : basis_k)
      for (const Monomial& b : basis_k)
        if (!check_product(a, b)) return r;
    for (const Monomial& x : basis_full)
      if (!check_square(x)) return r;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t n = 0; n < random_pairs; ++n) {
    if (!check_chain_map(detail::pick(basis_k, rng))) return r;
    if (!check_product(detail::pick(basis_k, rng), detail::pick(basis_k, rng))) return r;
    if (!check_square(detail::pick(basis_full, rng))) return r;
  }
  r.detail = std::to_string(r.checks) + " cellular comparisons" +
             (exhaustive ? " (exhaustive + random)" : " (random)");
  return r;
}

// DGA axioms of R*(K): d² = 0 exhaustively, and Leibniz, associativity,
// graded commutativity, rho multiplicativity and rho∘iota = id on random
// samples.
inline SuiteResult verify_axioms(const SimplicialComplex& k, std::uint64_t seed = 20240902,
                                 std::size_t samples = 20000) {
  SuiteResult r;
  r.name = "axioms";
  const int m = k.m();
  std::vector<Monomial> basis = KoszulBasis(k).flatten();

  for (const Monomial& x : basis) {
    ChainElement cx = ChainElement::term(x);
    ++r.checks;
    if (!differential(k, differential(k, cx)).zero()) {
      r.fail("d² != 0 on " + x.str());
      return r;
    }
  }

  std::vector<EMonomial> ebasis = e_basis_mod(k, 2 * m + 2);
  std::mt19937_64 rng(seed);
  for (std::size_t n = 0; n < samples; ++n) {
    const Monomial& a = detail::pick(basis, rng);
    const Monomial& b = detail::pick(basis, rng);
    const Monomial& c = detail::pick(basis, rng);
    ChainElement pa = ChainElement::term(a), pb = ChainElement::term(b),
                 pc = ChainElement::term(c);

    ChainElement ab = multiply(k, pa, pb);
    ++r.checks;
    ChainElement lhs = differential(k, ab);
    ChainElement rhs = multiply(k, differential(k, pa), pb);
    ChainElement second = multiply(k, pa, differential(k, pb));
    rhs += a.total_degree() % 2 ? -second : second;
    if (!(lhs == rhs)) {
      r.fail("Leibniz fails on " + a.str() + ", " + b.str());
      return r;
    }

    ++r.checks;
    if (!(multiply(k, ab, pc) == multiply(k, pa, multiply(k, pb, pc)))) {
      r.fail("associativity fails on " + a.str() + ", " + b.str() + ", " + c.str());
      return r;
    }

    ++r.checks;
    ChainElement ba = multiply(k, pb, pa);
    ChainElement signed_ba = (a.total_degree() * b.total_degree()) % 2 ? -ba : ba;
    if (!(ab == signed_ba)) {
      r.fail("graded commutativity fails on " + a.str() + ", " + b.str());
      return r;
    }

    ++r.checks;
    if (!(rho(k, iota(pa, m)) == pa)) {
      r.fail("rho∘iota != id on " + a.str());
      return r;
    }

    if (!ebasis.empty()) {
      const EMonomial& ex = ebasis[static_cast<std::size_t>(rng() % ebasis.size())];
      const EMonomial& ey = ebasis[static_cast<std::size_t>(rng() % ebasis.size())];
      EChain cx = EChain::term(ex), cy = EChain::term(ey);
      ++r.checks;
      if (!(rho(k, e_multiply(cx, cy)) == multiply(k, rho(k, cx), rho(k, cy)))) {
        r.fail("rho is not a ring map on " + ex.str() + ", " + ey.str());
        return r;
      }
    }
  }
  r.detail = std::to_string(r.checks) + " axiom checks (seed " + std::to_string(seed) + ")";
  return r;
}

}  // namespace macring
