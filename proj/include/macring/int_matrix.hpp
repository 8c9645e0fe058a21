#pragma once

#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "macring/integer.hpp"

namespace macring {

// Sparse integer matrix; only nonzero entries are stored, keyed (row, col).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative shape");
  }

  // Dense row-major initializer, mainly for tests and fixtures.
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = static_cast<int>(rows.size());
    int r = 0;
    for (const auto& row : rows) {
      if (r == 0) cols_ = static_cast<int>(row.size());
      if (static_cast<int>(row.size()) != cols_)
        throw std::invalid_argument("IntMatrix: ragged initializer");
      int c = 0;
      for (long long v : row) {
        if (v != 0) entries_.emplace(std::make_pair(r, c), Int(v));
        ++c;
      }
      ++r;
    }
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.entries_.emplace(std::make_pair(i, i), Int(1));
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int at(int r, int c) const {
    check_index(r, c);
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Int(0) : it->second;
  }

  void set(int r, int c, Int v) {
    check_index(r, c);
    if (v == 0)
      entries_.erase({r, c});
    else
      entries_.insert_or_assign({r, c}, std::move(v));
  }

  void add_at(int r, int c, const Int& v) {
    check_index(r, c);
    if (v == 0) return;
    auto [it, inserted] = entries_.try_emplace({r, c}, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) entries_.erase(it);
    }
  }

  const std::map<std::pair<int, int>, Int>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t nonzeros() const { return entries_.size(); }

  IntMatrix transpose() const {
    IntMatrix m(cols_, rows_);
    for (const auto& [rc, v] : entries_) m.entries_.emplace(std::make_pair(rc.second, rc.first), v);
    return m;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
    IntMatrix out(rows_, o.cols_);
    for (const auto& [rc, v] : entries_) {
      auto [r, k] = rc;
      auto it = o.entries_.lower_bound({k, 0});
      auto end = o.entries_.lower_bound({k + 1, 0});
      for (; it != end; ++it) out.add_at(r, it->first.second, v * it->second);
    }
    return out;
  }

  std::vector<Int> apply(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != cols_)
      throw std::invalid_argument("IntMatrix: vector length mismatch");
    std::vector<Int> out(static_cast<std::size_t>(rows_), Int(0));
    for (const auto& [rc, v] : entries_) out[static_cast<std::size_t>(rc.first)] += v * x[static_cast<std::size_t>(rc.second)];
    return out;
  }

  // Rows [r0, rows) as a new (rows - r0) x cols matrix.
  IntMatrix rows_from(int r0) const {
    if (r0 < 0 || r0 > rows_) throw std::invalid_argument("IntMatrix: bad row offset");
    IntMatrix out(rows_ - r0, cols_);
    for (auto it = entries_.lower_bound({r0, 0}); it != entries_.end(); ++it)
      out.entries_.emplace(std::make_pair(it->first.first - r0, it->first.second), it->second);
    return out;
  }

  std::vector<Int> column(int c) const {
    if (c < 0 || c >= cols_) throw std::invalid_argument("IntMatrix: bad column");
    std::vector<Int> out(static_cast<std::size_t>(rows_), Int(0));
    for (const auto& [rc, v] : entries_)
      if (rc.second == c) out[static_cast<std::size_t>(rc.first)] = v;
    return out;
  }

  bool operator==(const IntMatrix&) const = default;

 private:
  void check_index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::invalid_argument("IntMatrix: index (" + std::to_string(r) + "," +
                                  std::to_string(c) + ") out of " + std::to_string(rows_) +
                                  "x" + std::to_string(cols_));
  }

  int rows_ = 0, cols_ = 0;
  std::map<std::pair<int, int>, Int> entries_;
};

}  // namespace macring
