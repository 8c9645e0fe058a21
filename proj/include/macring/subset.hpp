#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

// Vertex subsets of the ground set [m] = {1, ..., m}, stored as 64-bit masks.
// Bit i-1 encodes vertex i; m is capped at 63.

namespace macring {

using Subset = std::uint64_t;

inline constexpr int kMaxGroundSet = 63;

constexpr Subset full_set(int m) { return (Subset{1} << m) - 1; }
constexpr Subset single(int v) { return Subset{1} << (v - 1); }
constexpr bool contains(Subset s, int v) { return (s >> (v - 1)) & 1; }
inline int card(Subset s) { return std::popcount(s); }

inline std::vector<int> vertices(Subset s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(s)));
  for (Subset t = s; t; t &= t - 1) out.push_back(std::countr_zero(t) + 1);
  return out;
}

// 0-based rank of v among the elements of s (pre: v in s).
inline int position_in(Subset s, int v) {
  return std::popcount(s & (single(v) - 1));
}

// Number of pairs (p, q) in a x b with p > q.  Its parity is the Koszul sign
// shared by the algebraic product and the cellular cup product.
inline int inversions(Subset a, Subset b) {
  int n = 0;
  for (Subset t = a; t; t &= t - 1) {
    Subset below = (Subset{1} << std::countr_zero(t)) - 1;
    n += std::popcount(b & below);
  }
  return n;
}

inline int koszul_sign(Subset a, Subset b) { return inversions(a, b) % 2 ? -1 : 1; }

// Lexicographic order on ascending vertex lists: {1,4} < {2,3}, {1} < {1,2}.
inline bool subset_lex_less(Subset a, Subset b) {
  while (a && b) {
    int va = std::countr_zero(a), vb = std::countr_zero(b);
    if (va != vb) return va < vb;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;
}

// Cardinality first, then lex: the canonical face order.
inline bool card_lex_less(Subset a, Subset b) {
  int ca = card(a), cb = card(b);
  if (ca != cb) return ca < cb;
  return subset_lex_less(a, b);
}

// All submasks of mask in (cardinality, lex) order.
inline std::vector<Subset> subsets_sorted(Subset mask) {
  std::vector<Subset> out;
  Subset sub = mask;
  while (true) {
    out.push_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
  std::sort(out.begin(), out.end(), card_lex_less);
  return out;
}

// Relabel s ⊆ omega through the order-preserving bijection omega -> [|omega|].
inline Subset pack_into(Subset s, Subset omega) {
  Subset out = 0;
  int k = 0;
  for (Subset t = omega; t; t &= t - 1, ++k)
    if (s & (t & (~t + 1))) out |= Subset{1} << k;
  return out;
}

inline Subset unpack_from(Subset packed, Subset omega) {
  Subset out = 0;
  int k = 0;
  for (Subset t = omega; t; t &= t - 1, ++k)
    if (packed & (Subset{1} << k)) out |= t & (~t + 1);
  return out;
}

inline std::string subset_str(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int v : vertices(s)) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace macring
