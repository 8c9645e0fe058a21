#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <json.hpp>

#include "macring/abelian_group.hpp"
#include "macring/cohomology.hpp"
#include "macring/errors.hpp"
#include "macring/int_matrix.hpp"
#include "macring/subset.hpp"

namespace macring {

// Finite simplicial complex on the ground set [m] = {1, ..., m}, stored as
// the full downward-closed face set in (cardinality, lex) order.  The empty
// face is always present; ghost vertices (i with {i} not a face) are allowed,
// so the complex {∅} is legal on any m.
//
// Input format: {"m": M, "facets": [[1-based vertices], ...]}.
struct Restriction;

class SimplicialComplex {
 public:
  SimplicialComplex() : m_(0), faces_{0}, face_set_{0} {}

  static SimplicialComplex from_facets(int m, const std::vector<Subset>& facets) {
    if (m < 0 || m > kMaxGroundSet)
      throw std::invalid_argument("from_facets: m out of range");
    std::unordered_set<std::uint64_t> closure{0};
    for (Subset f : facets) {
      if (f & ~full_set(m)) throw std::invalid_argument("from_facets: facet outside [m]");
      Subset sub = f;
      while (true) {
        closure.insert(sub);
        if (sub == 0) break;
        sub = (sub - 1) & f;
      }
    }
    SimplicialComplex k;
    k.m_ = m;
    k.faces_.assign(closure.begin(), closure.end());
    std::sort(k.faces_.begin(), k.faces_.end(), card_lex_less);
    k.face_set_ = std::move(closure);
    return k;
  }

  static SimplicialComplex parse(const std::string& text) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return from_json(doc);
  }

  static SimplicialComplex from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ParseError("top level: expected an object");
    if (!doc.contains("m")) throw ParseError("m: missing");
    if (!doc["m"].is_number_integer()) throw ParseError("m: expected an integer");
    long long m = doc["m"].get<long long>();
    if (m < 1 || m > kMaxGroundSet)
      throw ParseError("m: must be in 1.." + std::to_string(kMaxGroundSet) + ", got " +
                       std::to_string(m));
    if (!doc.contains("facets")) throw ParseError("facets: missing");
    const auto& list = doc["facets"];
    if (!list.is_array()) throw ParseError("facets: expected an array");
    std::vector<Subset> facets;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto& f = list[i];
      std::string loc = "facets[" + std::to_string(i) + "]";
      if (!f.is_array()) throw ParseError(loc + ": expected an array of vertices");
      Subset mask = 0;
      for (std::size_t p = 0; p < f.size(); ++p) {
        if (!f[p].is_number_integer())
          throw ParseError(loc + "[" + std::to_string(p) + "]: expected an integer vertex");
        long long v = f[p].get<long long>();
        if (v < 1 || v > m)
          throw ParseError(loc + "[" + std::to_string(p) + "]: vertex " + std::to_string(v) +
                           " out of range 1.." + std::to_string(m));
        if (mask & single(static_cast<int>(v)))
          throw ParseError(loc + ": duplicate vertex " + std::to_string(v));
        mask |= single(static_cast<int>(v));
      }
      facets.push_back(mask);
    }
    return from_facets(static_cast<int>(m), facets);
  }

  nlohmann::json to_json() const {
    nlohmann::json fl = nlohmann::json::array();
    for (Subset f : facets()) fl.push_back(vertices(f));
    return {{"m", m_}, {"facets", fl}};
  }

  // Canonical single-line form: facets in lex order, vertices ascending.
  std::string serialize() const { return to_json().dump(); }

  int m() const { return m_; }
  int dim() const { return card(faces_.back()) - 1; }
  const std::vector<Subset>& faces() const { return faces_; }
  std::size_t face_count() const { return faces_.size(); }
  bool is_face(Subset s) const { return face_set_.count(s) != 0; }

  std::vector<Subset> facets() const {
    std::vector<Subset> out;
    for (Subset f : faces_) {
      bool maximal = true;
      for (int v = 1; v <= m_ && maximal; ++v)
        if (!contains(f, v) && is_face(f | single(v))) maximal = false;
      if (maximal) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), subset_lex_less);
    return out;
  }

  bool contains_subcomplex(const SimplicialComplex& other) const {
    if (other.m_ != m_) return false;
    for (Subset f : other.faces_)
      if (!is_face(f)) return false;
    return true;
  }

  // True iff some vertex v satisfies sigma ∈ K => sigma ∪ {v} ∈ K.
  bool is_cone() const {
    for (int v = 1; v <= m_; ++v) {
      bool apex = true;
      for (Subset f : faces_)
        if (!is_face(f | single(v))) {
          apex = false;
          break;
        }
      if (apex) return true;
    }
    return false;
  }

  // Full subcomplex K_omega = {sigma ∈ K : sigma ⊆ omega}, relabeled to the
  // ground set [|omega|]; see Restriction below.
  Restriction full_subcomplex(Subset omega) const;

  bool operator==(const SimplicialComplex& o) const { return m_ == o.m_ && faces_ == o.faces_; }

 private:
  int m_;
  std::vector<Subset> faces_;
  std::unordered_set<std::uint64_t> face_set_;
};

// Result of restricting to a vertex subset: the relabeled complex together
// with vertex_of[k], the original label of the new vertex k+1.
struct Restriction {
  SimplicialComplex complex;
  std::vector<int> vertex_of;
};

inline Restriction SimplicialComplex::full_subcomplex(Subset omega) const {
  if (omega & ~full_set(m_)) throw std::invalid_argument("full_subcomplex: omega outside [m]");
  Restriction r;
  r.vertex_of = vertices(omega);
  r.complex.m_ = card(omega);
  r.complex.faces_.clear();
  r.complex.face_set_.clear();
  for (Subset f : faces_)
    if ((f & ~omega) == 0) {
      Subset packed = pack_into(f, omega);
      r.complex.faces_.push_back(packed);
      r.complex.face_set_.insert(packed);
    }
  std::sort(r.complex.faces_.begin(), r.complex.faces_.end(), card_lex_less);
  return r;
}

inline SimplicialComplex full_simplex(int m) {
  return SimplicialComplex::from_facets(m, {full_set(m)});
}

// Faces grouped by cardinality, each level in lex order; level 0 is the
// empty face alone.
struct FaceTable {
  std::vector<std::vector<Subset>> levels;
  std::vector<std::map<Subset, int>> index;

  int count(int cardinality) const {
    if (cardinality < 0 || cardinality >= static_cast<int>(levels.size())) return 0;
    return static_cast<int>(levels[static_cast<std::size_t>(cardinality)].size());
  }
};

inline FaceTable face_table(const SimplicialComplex& k) {
  FaceTable t;
  t.levels.resize(static_cast<std::size_t>(k.dim() + 2));
  for (Subset f : k.faces()) t.levels[static_cast<std::size_t>(card(f))].push_back(f);
  t.index.resize(t.levels.size());
  for (std::size_t c = 0; c < t.levels.size(); ++c)
    for (std::size_t i = 0; i < t.levels[c].size(); ++i) t.index[c].emplace(t.levels[c][i], static_cast<int>(i));
  return t;
}

// Reduced (augmented) simplicial cochain complex over Z.  delta(d) maps
// cochains on d-faces to cochains on (d+1)-faces; the d = -1 level is the
// empty face, so cohomology here is reduced cohomology, and the complex {∅}
// has H~^{-1} = Z.
class ReducedCochainComplex {
 public:
  explicit ReducedCochainComplex(const SimplicialComplex& k)
      : table_(face_table(k)), dim_(k.dim()) {}

  const FaceTable& table() const { return table_; }
  int dim() const { return dim_; }

  IntMatrix delta(int d) const {
    IntMatrix m(table_.count(d + 2), table_.count(d + 1));
    if (d + 2 < 1 || d + 2 >= static_cast<int>(table_.levels.size())) return m;
    const auto& tgt = table_.levels[static_cast<std::size_t>(d + 2)];
    const auto& src_index = table_.index[static_cast<std::size_t>(d + 1)];
    for (std::size_t row = 0; row < tgt.size(); ++row) {
      Subset tau = tgt[row];
      for (Subset t = tau; t; t &= t - 1) {
        int v = std::countr_zero(t) + 1;
        auto it = src_index.find(tau & ~single(v));
        if (it == src_index.end()) throw InternalError("delta: missing face of a face");
        m.add_at(static_cast<int>(row), it->second, position_in(tau, v) % 2 ? -1 : 1);
      }
    }
    return m;
  }

  AbelianGroup reduced_cohomology(int d) const {
    return cohomology_at(delta(d - 1), delta(d)).group;
  }

 private:
  FaceTable table_;
  int dim_;
};

inline ReducedCochainComplex reduced_cochain_complex(const SimplicialComplex& k) {
  return ReducedCochainComplex(k);
}

}  // namespace macring
