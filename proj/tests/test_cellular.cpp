#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "macring/macring.hpp"
#include "support.hpp"

using macring::boundary;
using macring::CellChain;
using macring::CellCochain;
using macring::cells;
using macring::CellWord;
using macring::ChainElement;
using macring::coboundary;
using macring::cup;
using macring::differential;
using macring::iso_g;
using macring::iso_g_inverse;
using macring::KoszulBasis;
using macring::Monomial;
using macring::multiply;
using macring::restrict_q;
using macring::SimplicialComplex;
using macring::single;
using macring::Subset;

namespace {

Subset s(std::initializer_list<int> vs) {
  Subset out = 0;
  for (int v : vs) out |= single(v);
  return out;
}

}  // namespace

TEST_CASE("cell enumeration") {
  SECTION("the full polydisc has 3^m cells") {
    for (int m = 1; m <= 4; ++m) {
      std::size_t total = 0;
      for (const auto& [d, list] : cells(macring::full_simplex(m))) total += list.size();
      std::size_t expect = 1;
      for (int t = 0; t < m; ++t) expect *= 3;
      REQUIRE(total == expect);
    }
  }
  SECTION("dimension formula and per-dimension match with the algebra basis") {
    for (const auto& [name, k] : test_support::acceptance_corpus()) {
      if (k.m() > 5) continue;
      CAPTURE(name);
      auto by_dim = cells(k);
      std::map<int, std::size_t> basis_count;
      for (const Monomial& x : KoszulBasis(k).flatten()) ++basis_count[x.total_degree()];
      std::map<int, std::size_t> cell_count;
      for (const auto& [d, list] : by_dim) {
        for (const CellWord& w : list) {
          REQUIRE(w.dimension() == d);
          REQUIRE(macring::cell_in(k, w));
        }
        cell_count[d] = list.size();
      }
      REQUIRE(cell_count == basis_count);
    }
  }
  SECTION("deterministic order sorted by omega size then words") {
    auto by_dim = cells(test_support::cycle(5));
    for (const auto& [d, list] : by_dim)
      for (std::size_t p = 1; p < list.size(); ++p) {
        int ca = macring::card(list[p - 1].omega);
        int cb = macring::card(list[p].omega);
        REQUIRE(ca <= cb);
        if (ca == cb) REQUIRE(list[p - 1] < list[p]);
      }
  }
}

TEST_CASE("cellular boundary") {
  SECTION("pinned signs") {
    CellChain b = boundary(CellWord{s({1, 2}), s({3})});
    CellChain expect;
    expect.add({s({2}), s({1, 3})}, 1);
    expect.add({s({1}), s({2, 3})}, 1);
    REQUIRE(b == expect);

    CellChain b2 = boundary(CellWord{s({2}), s({1})});
    REQUIRE(b2 == -CellChain::term({0, s({1, 2})}, 1));
  }
  SECTION("boundary squares to zero over the polydisc") {
    for (const auto& [d, list] : cells(macring::full_simplex(4)))
      for (const CellWord& w : list) REQUIRE(boundary(boundary(CellChain::term(w, 1))).zero());
  }
  SECTION("boundary of a cell of Z_K stays in Z_K") {
    auto k = test_support::rp2_6();
    for (const auto& [d, list] : cells(k))
      for (const CellWord& w : list) {
        CellChain b = boundary(w);
        for (const auto& [t, c] : b.terms()) REQUIRE(macring::cell_in(k, t));
      }
  }
}

TEST_CASE("coboundary is the transpose of the boundary") {
  auto k = test_support::cycle(5);
  auto by_dim = cells(k);
  for (const auto& [d, list] : by_dim) {
    auto up = by_dim.find(d + 1);
    if (up == by_dim.end()) continue;
    for (const CellWord& w : list) {
      CellCochain dw = coboundary(k, CellCochain::term(w, 1));
      for (const CellWord& t : up->second) {
        REQUIRE(dw.coeff(t) == boundary(t).coeff(w));
      }
    }
  }
  SECTION("coboundary squares to zero") {
    for (const auto& [d, list] : by_dim)
      for (const CellWord& w : list)
        REQUIRE(coboundary(k, coboundary(k, CellCochain::term(w, 1))).zero());
  }
  SECTION("rejects cochains supported outside the complex") {
    REQUIRE_THROWS_AS(coboundary(k, CellCochain::term({s({1, 3}), 0}, 1)),
                      std::invalid_argument);
  }
}

TEST_CASE("g intertwines the algebra differential with the cellular coboundary") {
  std::mt19937_64 rng(515151);
  std::vector<SimplicialComplex> pool = {test_support::cycle(5), test_support::rp2_6()};
  for (int t = 0; t < 6; ++t) pool.push_back(test_support::random_complex(rng, 5));
  for (const auto& k : pool) {
    for (const Monomial& x : KoszulBasis(k).flatten()) {
      ChainElement cx = ChainElement::term(x, 1);
      REQUIRE(iso_g(k, differential(k, cx)) == coboundary(k, iso_g(k, cx)));
    }
  }
}

TEST_CASE("g carries the algebra product to the cup product") {
  std::mt19937_64 rng(626262);
  std::vector<SimplicialComplex> pool = {test_support::cycle(5)};
  for (int t = 0; t < 5; ++t) pool.push_back(test_support::random_complex(rng, 5));
  for (const auto& k : pool) {
    auto flat = KoszulBasis(k).flatten();
    for (const Monomial& a : flat)
      for (const Monomial& b : flat) {
        ChainElement prod = multiply(k, a, b);
        CellCochain lhs = cup(k, iso_g(k, ChainElement::term(a, 1)), iso_g(k, ChainElement::term(b, 1)));
        REQUIRE(lhs == iso_g(k, prod));
      }
  }
}

TEST_CASE("g is a bijection on basis elements") {
  auto k = test_support::cycle(5);
  for (const Monomial& x : KoszulBasis(k).flatten()) {
    ChainElement cx = ChainElement::term(x, 1);
    REQUIRE(iso_g_inverse(k, iso_g(k, cx)) == cx);
  }
  SECTION("non-admissible input is rejected") {
    // {1,3} is not an edge of the pentagon
    REQUIRE_THROWS_AS(iso_g(k, ChainElement::term({0, s({1, 3})}, 1)), std::invalid_argument);
  }
}

TEST_CASE("restriction square commutes") {
  // p: R*(simplex) -> R*(K) drops sigma outside K; q restricts polydisc
  // cochains to the cells of Z_K; both routes from R*(simplex) agree.
  std::mt19937_64 rng(737373);
  std::vector<SimplicialComplex> pool = {test_support::cycle(5), test_support::disjoint_points(3)};
  for (int t = 0; t < 5; ++t) pool.push_back(test_support::random_complex(rng, 5));
  for (const auto& k : pool) {
    auto simplex = macring::full_simplex(k.m());
    for (const Monomial& x : KoszulBasis(simplex).flatten()) {
      ChainElement cx = ChainElement::term(x, 1);
      CellCochain via_q = restrict_q(k, iso_g(simplex, cx));
      CellCochain via_p = iso_g(k, macring::restrict_to_subcomplex(k, simplex, cx));
      REQUIRE(via_q == via_p);
    }
  }
}
