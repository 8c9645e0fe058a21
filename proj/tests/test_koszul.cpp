#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "macring/macring.hpp"
#include "support.hpp"

using macring::Bidegree;
using macring::ChainElement;
using macring::differential;
using macring::EChain;
using macring::EMonomial;
using macring::Int;
using macring::KoszulBasis;
using macring::Monomial;
using macring::multiply;
using macring::SimplicialComplex;
using macring::single;
using macring::Subset;

namespace {

Subset s(std::initializer_list<int> vs) {
  Subset out = 0;
  for (int v : vs) out |= single(v);
  return out;
}

EMonomial em(int m, Subset omega, std::initializer_list<int> exps) {
  EMonomial x = macring::e_unit(m);
  x.omega = omega;
  std::size_t i = 0;
  for (int e : exps) x.exps[i++] = e;
  return x;
}

}  // namespace

TEST_CASE("monomial bookkeeping") {
  Monomial x{s({2, 4}), s({1})};
  REQUIRE(x.i() == 2);
  REQUIRE(x.j() == 3);
  REQUIRE(x.total_degree() == 4);
  REQUIRE(macring::bidegree_of(x) == Bidegree{2, 3});
  REQUIRE(Bidegree{2, 3}.total_degree() == 4);
  REQUIRE(Bidegree{2, 3}.str() == "(-2,6)");
  REQUIRE(x.str() == "u{2,4}v{1}");
  REQUIRE(Monomial{}.unit());
}

TEST_CASE("basis enumeration counts admissible pairs") {
  // the basis over K is {u_omega v_sigma : sigma in K, omega disjoint},
  // so the count is sum over faces of 2^(m - |sigma|)
  auto count = [](const SimplicialComplex& k) {
    std::size_t expect = 0;
    for (Subset f : k.faces()) expect += std::size_t{1} << (k.m() - macring::card(f));
    return expect;
  };
  for (const auto& [name, k] : test_support::acceptance_corpus()) {
    if (k.m() > 6) continue;
    CAPTURE(name);
    KoszulBasis basis(k);
    REQUIRE(basis.total() == count(k));
    for (const auto& [bd, monos] : basis.by_bidegree()) {
      for (std::size_t p = 0; p < monos.size(); ++p) {
        REQUIRE(macring::bidegree_of(monos[p]) == bd);
        REQUIRE(macring::is_admissible(k, monos[p]));
        REQUIRE(basis.index_of(bd, monos[p]) == static_cast<int>(p));
        if (p > 0) REQUIRE(monos[p - 1] < monos[p]);
      }
    }
  }
}

TEST_CASE("differential on pinned examples") {
  auto pent = test_support::cycle(5);
  SECTION("u_1 goes to v_1") {
    auto d = differential(pent, ChainElement::term({s({1}), 0}, 1));
    REQUIRE(d == ChainElement::term({0, s({1})}, 1));
  }
  SECTION("u_13 v_2: only admissible insertions survive") {
    // candidate targets: u_3 v_{12} (sign +, edge 12 in K) and u_1 v_{23} (sign -, edge 23 in K)
    auto d = differential(pent, ChainElement::term({s({1, 3}), s({2})}, 1));
    ChainElement expect = ChainElement::term({s({3}), s({1, 2})}, 1) +
                          ChainElement::term({s({1}), s({2, 3})}, -1);
    REQUIRE(d == expect);
  }
  SECTION("insertion of a non-face is dropped") {
    // in the pentagon {1,3} is not an edge
    auto d = differential(pent, ChainElement::term({s({3}), s({1})}, 1));
    REQUIRE(d.zero());
  }
  SECTION("mixed bidegrees are rejected") {
    ChainElement mixed = ChainElement::term({s({1}), 0}, 1) + ChainElement::term({0, s({1})}, 1);
    REQUIRE_THROWS_AS(differential(pent, mixed), std::invalid_argument);
  }
}

TEST_CASE("differential squares to zero on every basis element") {
  for (const auto& [name, k] : test_support::acceptance_corpus()) {
    if (k.m() > 5) continue;
    CAPTURE(name);
    for (const Monomial& x : KoszulBasis(k).flatten()) {
      auto dd = differential(k, differential(k, ChainElement::term(x, 1)));
      REQUIRE(dd.zero());
    }
  }
}

TEST_CASE("product on pinned examples") {
  auto pent = test_support::cycle(5);
  SECTION("unit is neutral") {
    Monomial x{s({2, 4}), s({1})};
    REQUIRE(multiply(pent, Monomial{}, x) == ChainElement::term(x, 1));
    REQUIRE(multiply(pent, x, Monomial{}) == ChainElement::term(x, 1));
  }
  SECTION("koszul sign from interleaving") {
    // u_2 * u_1 = -u_12
    REQUIRE(multiply(pent, Monomial{s({2}), 0}, Monomial{s({1}), 0}) ==
            ChainElement::term({s({1, 2}), 0}, -1));
    REQUIRE(multiply(pent, Monomial{s({1}), 0}, Monomial{s({2}), 0}) ==
            ChainElement::term({s({1, 2}), 0}, 1));
  }
  SECTION("overlapping supports vanish") {
    REQUIRE(multiply(pent, Monomial{s({1}), 0}, Monomial{s({1}), 0}).zero());
    REQUIRE(multiply(pent, Monomial{s({1}), 0}, Monomial{0, s({1})}).zero());
  }
  SECTION("sigma union must be a face") {
    REQUIRE(multiply(pent, Monomial{0, s({1})}, Monomial{0, s({3})}).zero());
    REQUIRE(multiply(pent, Monomial{0, s({1})}, Monomial{0, s({2})}) ==
            ChainElement::term({0, s({1, 2})}, 1));
  }
}

TEST_CASE("extended algebra differential and face-ring quotient") {
  SECTION("derivation on a square") {
    // d(v_1^2) = 0 but d(u_1 v_1^2) = v_1^3
    auto d = macring::e_differential(EChain::term(em(2, 0, {2, 0}), 1));
    REQUIRE(d.zero());
    auto d2 = macring::e_differential(EChain::term(em(2, s({1}), {2, 0}), 1));
    REQUIRE(d2 == EChain::term(em(2, 0, {3, 0}), 1));
  }
  SECTION("signs alternate across the omega positions") {
    // d(u_12) = v_1 u_2 - u_1 v_2
    auto d = macring::e_differential(EChain::term(em(2, s({1, 2}), {0, 0}), 1));
    EChain expect = EChain::term(em(2, s({2}), {1, 0}), 1) +
                    EChain::term(em(2, s({1}), {0, 1}), -1);
    REQUIRE(d == expect);
  }
  SECTION("quotient drops non-faces") {
    auto two = test_support::disjoint_points(2);
    auto x = EChain::term(em(2, 0, {1, 1}), 1);
    REQUIRE(macring::project_to_face_ring(two, x).zero());
    auto y = EChain::term(em(2, 0, {2, 0}), 1);
    REQUIRE(macring::project_to_face_ring(two, y) == y);
  }
  SECTION("d squares to zero in the quotient") {
    auto pent = test_support::cycle(5);
    for (const EMonomial& x : macring::e_basis_mod(pent, 6)) {
      auto dd = macring::e_differential_mod(pent, macring::e_differential_mod(pent, EChain::term(x, 1)));
      REQUIRE(dd.zero());
    }
  }
}

TEST_CASE("rho and iota") {
  auto pent = test_support::cycle(5);
  SECTION("rho keeps reduced face monomials") {
    auto x = EChain::term(em(5, s({3}), {1, 1, 0, 0, 0}), 1);
    REQUIRE(macring::rho(pent, x) == ChainElement::term({s({3}), s({1, 2})}, 1));
  }
  SECTION("rho kills squares and overlaps") {
    REQUIRE(macring::rho(pent, EChain::term(em(5, 0, {2, 0, 0, 0, 0}), 1)).zero());
    REQUIRE(macring::rho(pent, EChain::term(em(5, s({1}), {1, 0, 0, 0, 0}), 1)).zero());
  }
  SECTION("rho after iota is the identity") {
    for (const Monomial& x : KoszulBasis(pent).flatten()) {
      auto back = macring::rho(pent, macring::iota(ChainElement::term(x, 1), 5));
      REQUIRE(back == ChainElement::term(x, 1));
    }
  }
}

TEST_CASE("homotopy identity on the full extended algebra") {
  // d s + s d = id - iota rho over E_m, checked on every monomial up to the
  // degree bound; the full simplex makes the quotient trivial
  for (int m = 1; m <= 3; ++m) {
    auto k = macring::full_simplex(m);
    int bound = 2 * m + 2;
    for (const EMonomial& x : macring::e_basis(m, bound)) {
      CAPTURE(m, x.str());
      EChain cx = EChain::term(x, 1);
      EChain lhs = macring::e_differential(macring::homotopy_s(m, cx)) +
                   macring::homotopy_s(m, macring::e_differential(cx));
      EChain rhs = cx - macring::iota(macring::rho(k, cx), m);
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("homotopy identity survives the face-ring quotient") {
  auto pent = test_support::cycle(5);
  for (const EMonomial& x : macring::e_basis_mod(pent, 8)) {
    CAPTURE(x.str());
    EChain cx = EChain::term(x, 1);
    EChain lhs = macring::e_differential_mod(pent, macring::homotopy_s(5, cx)) +
                 macring::homotopy_s(5, macring::e_differential_mod(pent, cx));
    EChain rhs = cx - macring::iota(macring::rho(pent, cx), 5);
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("homotopy pinned value") {
  // s(u_1 v_2^2) = -u_1 u_2 v_2: the second tensor slot fires with the sign
  // of deg(u_1) = 1
  auto got = macring::homotopy_s(2, EChain::term(em(2, s({1}), {0, 2}), 1));
  REQUIRE(got == EChain::term(em(2, s({1, 2}), {0, 1}), -1));
}

TEST_CASE("e_basis enumeration is complete and deterministic") {
  auto b1 = macring::e_basis(2, 4);
  auto b2 = macring::e_basis(2, 4);
  REQUIRE(b1 == b2);
  for (std::size_t i = 0; i + 1 < b1.size(); ++i) REQUIRE(b1[i] < b1[i + 1]);
  for (const EMonomial& x : b1) REQUIRE(x.total_degree() <= 4);
  // m = 1, bound 2: 1, u1, v1, u1 v1 would be degree 3 -> excluded
  auto small = macring::e_basis(1, 2);
  REQUIRE(small.size() == 3);
  // count check for m = 2, bound 4: omega in {0,1,2,12} x exponent vectors
  // (e1,e2) with |omega| + 2(e1+e2) <= 4
  std::size_t expect = 0;
  for (Subset omega = 0; omega < 4; ++omega) {
    int budget = 4 - macring::card(omega);
    for (int e1 = 0; 2 * e1 <= budget; ++e1)
      for (int e2 = 0; 2 * (e1 + e2) <= budget; ++e2) ++expect;
  }
  REQUIRE(b1.size() == expect);
}

TEST_CASE("restriction to a subcomplex kills missing faces") {
  auto pent = test_support::cycle(5);
  auto sub = SimplicialComplex::from_facets(5, {s({1, 2}), s({3})});
  REQUIRE(pent.contains_subcomplex(sub));
  ChainElement x = ChainElement::term({s({4}), s({1, 2})}, 2) +
                   ChainElement::term({s({4}), s({2, 3})}, 5);
  auto r = macring::restrict_to_subcomplex(sub, pent, x);
  REQUIRE(r == ChainElement::term({s({4}), s({1, 2})}, 2));
  auto not_sub = SimplicialComplex::from_facets(5, {s({1, 3})});
  REQUIRE_THROWS_AS(macring::restrict_to_subcomplex(not_sub, pent, x), std::invalid_argument);
}
