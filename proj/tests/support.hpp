#pragma once

// Shared helpers for the test binaries: an independent rational-elimination
// oracle for rank/determinant (kept deliberately separate from the Smith
// normal form code under test) and the fixture corpus builders.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "macring/macring.hpp"

namespace test_support {

using Rational = boost::multiprecision::cpp_rational;

inline std::vector<std::vector<Rational>> to_dense(const macring::IntMatrix& a) {
  std::vector<std::vector<Rational>> d(
      static_cast<std::size_t>(a.rows()),
      std::vector<Rational>(static_cast<std::size_t>(a.cols()), Rational(0)));
  for (const auto& [rc, v] : a.entries())
    d[static_cast<std::size_t>(rc.first)][static_cast<std::size_t>(rc.second)] = Rational(v);
  return d;
}

// Gauss elimination over Q with partial pivoting by first nonzero.
inline int rank_oracle(const macring::IntMatrix& a) {
  auto d = to_dense(a);
  const std::size_t rows = d.size();
  const std::size_t cols = rows ? d[0].size() : static_cast<std::size_t>(a.cols());
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && d[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(d[rank], d[piv]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || d[r][c] == 0) continue;
      Rational f = d[r][c] / d[rank][c];
      for (std::size_t cc = c; cc < cols; ++cc) d[r][cc] -= f * d[rank][cc];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

inline Rational det_oracle(const macring::IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det_oracle: not square");
  auto d = to_dense(a);
  const std::size_t n = d.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && d[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(d[c], d[piv]);
      det = -det;
    }
    det *= d[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (d[r][c] == 0) continue;
      Rational f = d[r][c] / d[c][c];
      for (std::size_t cc = c; cc < n; ++cc) d[r][cc] -= f * d[c][cc];
    }
  }
  return det;
}

inline macring::IntMatrix random_matrix(std::mt19937_64& rng, int max_dim = 8) {
  int rows = static_cast<int>(rng() % static_cast<std::uint64_t>(max_dim + 1));
  int cols = static_cast<int>(rng() % static_cast<std::uint64_t>(max_dim + 1));
  macring::IntMatrix a(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (rng() % 100 < 55) continue;
      long long v = static_cast<long long>(rng() % 19) - 9;
      a.set(r, c, macring::Int(v));
    }
  return a;
}

// --- fixture complexes ---

inline macring::SimplicialComplex boundary_simplex(int m) {
  std::vector<macring::Subset> facets;
  for (int v = 1; v <= m; ++v) facets.push_back(macring::full_set(m) & ~macring::single(v));
  return macring::SimplicialComplex::from_facets(m, facets);
}

inline macring::SimplicialComplex disjoint_points(int k) {
  std::vector<macring::Subset> facets;
  for (int v = 1; v <= k; ++v) facets.push_back(macring::single(v));
  return macring::SimplicialComplex::from_facets(k, facets);
}

inline macring::SimplicialComplex cycle(int n) {
  std::vector<macring::Subset> facets;
  for (int v = 1; v <= n; ++v) {
    int w = v == n ? 1 : v + 1;
    facets.push_back(macring::single(v) | macring::single(w));
  }
  return macring::SimplicialComplex::from_facets(n, facets);
}

// Vertex-minimal triangulation of RP^2 (6 vertices, 10 triangles, every edge
// in exactly two of them, euler characteristic 1).
inline macring::SimplicialComplex rp2_6() {
  auto f = [](int a, int b, int c) {
    return macring::single(a) | macring::single(b) | macring::single(c);
  };
  return macring::SimplicialComplex::from_facets(
      6, {f(1, 2, 4), f(1, 2, 6), f(1, 3, 4), f(1, 3, 5), f(1, 5, 6), f(2, 3, 5), f(2, 3, 6),
          f(2, 4, 5), f(3, 4, 6), f(4, 5, 6)});
}

inline macring::SimplicialComplex random_complex(std::mt19937_64& rng, int max_m = 7) {
  int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_m));
  int nf = static_cast<int>(rng() % static_cast<std::uint64_t>(m + 3));
  std::vector<macring::Subset> facets;
  for (int i = 0; i < nf; ++i) {
    int size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(m < 4 ? m : 4));
    macring::Subset f = 0;
    for (int t = 0; t < size; ++t)
      f |= macring::single(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(m)));
    facets.push_back(f);
  }
  return macring::SimplicialComplex::from_facets(m, facets);
}

// The acceptance corpus: named so failures point at a concrete complex.
inline std::vector<std::pair<std::string, macring::SimplicialComplex>> acceptance_corpus() {
  std::vector<std::pair<std::string, macring::SimplicialComplex>> out;
  for (int m = 1; m <= 5; ++m) out.emplace_back("simplex-" + std::to_string(m), macring::full_simplex(m));
  for (int m = 1; m <= 5; ++m) out.emplace_back("boundary-" + std::to_string(m), boundary_simplex(m));
  for (int k = 1; k <= 6; ++k) out.emplace_back("points-" + std::to_string(k), disjoint_points(k));
  out.emplace_back("pentagon", cycle(5));
  out.emplace_back("hexagon", cycle(6));
  out.emplace_back("rp2-6", rp2_6());
  std::mt19937_64 rng(0x6d616372696e6721ull);
  for (int i = 1; i <= 20; ++i)
    out.emplace_back("random-" + std::to_string(i), random_complex(rng, 7));
  return out;
}

}  // namespace test_support
