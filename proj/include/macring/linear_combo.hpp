#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "macring/integer.hpp"

namespace macring {

// Sparse integer linear combination of basis keys.  Zero coefficients are
// never stored, so operator== is structural equality of elements.
template <class Key>
class LinearCombo {
 public:
  LinearCombo() = default;

  static LinearCombo term(Key k, Int c = 1) {
    LinearCombo x;
    x.add(k, c);
    return x;
  }

  void add(const Key& k, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const std::map<Key, Int>& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Int coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Int(0) : it->second;
  }

  LinearCombo& operator+=(const LinearCombo& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinearCombo& operator-=(const LinearCombo& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinearCombo& operator*=(const Int& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }

  friend LinearCombo operator+(LinearCombo a, const LinearCombo& b) { return a += b; }
  friend LinearCombo operator-(LinearCombo a, const LinearCombo& b) { return a -= b; }
  friend LinearCombo operator*(const Int& c, LinearCombo a) { return a *= c; }
  friend LinearCombo operator-(LinearCombo a) { return a *= Int(-1); }

  bool operator==(const LinearCombo&) const = default;

  // "3*k1 - k2", with Key::str() providing the key text.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      if (out.empty()) {
        if (c == -1)
          out += "-";
        else if (c != 1)
          out += c.str() + "*";
      } else {
        out += c < 0 ? " - " : " + ";
        Int a = abs(c);
        if (a != 1) out += a.str() + "*";
      }
      out += k.str();
    }
    return out;
  }

 private:
  std::map<Key, Int> terms_;
};

}  // namespace macring
