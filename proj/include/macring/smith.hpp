#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "macring/errors.hpp"
#include "macring/int_matrix.hpp"

namespace macring {

// Smith normal form over Z:  U * A * V = diag(d1, ..., dr)  with positive
// invariant factors d1 | d2 | ... | dr and unimodular U, V.
//
// Pivoting is fixed so the reduction (and hence U, V) is reproducible:
// smallest |entry| first, then smallest Markowitz fill-in estimate
// (nnz(row)-1)*(nnz(col)-1), ties broken by lowest row then lowest column.
struct SNFResult {
  std::vector<Int> diag;
  int rank = 0;
  // Present iff transforms were requested.  u_inv and v_inv are the exact
  // unimodular inverses, tracked alongside u and v.
  std::optional<IntMatrix> u, v, u_inv, v_inv;

  IntMatrix diagonal_matrix(int rows, int cols) const {
    IntMatrix d(rows, cols);
    for (int i = 0; i < rank; ++i) d.set(i, i, diag[static_cast<std::size_t>(i)]);
    return d;
  }
};

enum class Transforms { kNone, kFull };

namespace detail {

class SmithWorker {
 public:
  SmithWorker(const IntMatrix& a, bool track)
      : nrows_(a.rows()), ncols_(a.cols()), track_(track) {
    w_.resize(static_cast<std::size_t>(nrows_));
    col_rows_.resize(static_cast<std::size_t>(ncols_));
    for (const auto& [rc, v] : a.entries()) {
      w_[static_cast<std::size_t>(rc.first)].emplace(rc.second, v);
      col_rows_[static_cast<std::size_t>(rc.second)].insert(rc.first);
    }
    if (track_) {
      u_ = identity_rows(nrows_);
      uinv_t_ = identity_rows(nrows_);
      v_t_ = identity_rows(ncols_);
      vinv_ = identity_rows(ncols_);
    }
  }

  void run() {
    int nmin = nrows_ < ncols_ ? nrows_ : ncols_;
    int t = 0;
    while (t < nmin) {
      auto piv = select_pivot(t);
      if (!piv) break;
      swap_rows_op(t, piv->first);
      swap_cols_op(t, piv->second);
      clear_position(t);
      ++t;
    }
    rank_ = t;
    for (int i = 0; i < rank_; ++i)
      if (w_[static_cast<std::size_t>(i)].at(i) < 0) negate_row_op(i);
    smooth_divisibility();
  }

  SNFResult result() const {
    SNFResult res;
    res.rank = rank_;
    for (int i = 0; i < rank_; ++i) {
      const Int& d = w_[static_cast<std::size_t>(i)].at(i);
      if (d <= 0) throw InternalError("smith: nonpositive invariant factor");
      if (i > 0 && d % res.diag.back() != 0)
        throw InternalError("smith: divisibility chain violated");
      res.diag.push_back(d);
    }
    if (track_) {
      res.u = to_matrix(u_, nrows_);
      res.u_inv = to_matrix(uinv_t_, nrows_).transpose();
      res.v = to_matrix(v_t_, ncols_).transpose();
      res.v_inv = to_matrix(vinv_, ncols_);
    }
    return res;
  }

 private:
  using SparseRows = std::vector<std::map<int, Int>>;

  static SparseRows identity_rows(int n) {
    SparseRows m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)].emplace(i, 1);
    return m;
  }

  static IntMatrix to_matrix(const SparseRows& m, int n) {
    IntMatrix out(n, n);
    for (int r = 0; r < n; ++r)
      for (const auto& [c, v] : m[static_cast<std::size_t>(r)]) out.set(r, c, v);
    return out;
  }

  Int get_w(int r, int c) const {
    const auto& row = w_[static_cast<std::size_t>(r)];
    auto it = row.find(c);
    return it == row.end() ? Int(0) : it->second;
  }

  void set_w(int r, int c, Int val) {
    auto& row = w_[static_cast<std::size_t>(r)];
    if (val == 0) {
      if (row.erase(c)) col_rows_[static_cast<std::size_t>(c)].erase(r);
    } else {
      auto [it, inserted] = row.insert_or_assign(c, std::move(val));
      (void)it;
      if (inserted) col_rows_[static_cast<std::size_t>(c)].insert(r);
    }
  }

  // rows (r1, r2) <- (p*r1 + q*r2, rr*r1 + ss*r2) on a plain row structure.
  static void rows_two_op(SparseRows& m, int r1, int r2, const Int& p, const Int& q,
                          const Int& rr, const Int& ss) {
    auto& a = m[static_cast<std::size_t>(r1)];
    auto& b = m[static_cast<std::size_t>(r2)];
    std::map<int, Int> na, nb;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
      int c;
      Int va = 0, vb = 0;
      if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
        c = ia->first;
        va = ia->second;
        ++ia;
      } else if (ia == a.end() || ib->first < ia->first) {
        c = ib->first;
        vb = ib->second;
        ++ib;
      } else {
        c = ia->first;
        va = ia->second;
        vb = ib->second;
        ++ia;
        ++ib;
      }
      Int x = p * va + q * vb;
      if (x != 0) na.emplace(c, std::move(x));
      Int y = rr * va + ss * vb;
      if (y != 0) nb.emplace(c, std::move(y));
    }
    a = std::move(na);
    b = std::move(nb);
  }

  // Same on the working matrix, maintaining the column index.
  void w_two_rows(int r1, int r2, const Int& p, const Int& q, const Int& rr, const Int& ss) {
    std::map<int, Int> old1 = w_[static_cast<std::size_t>(r1)];
    std::map<int, Int> old2 = w_[static_cast<std::size_t>(r2)];
    rows_two_op(w_, r1, r2, p, q, rr, ss);
    for (const auto& [c, v] : old1)
      if (!w_[static_cast<std::size_t>(r1)].count(c)) col_rows_[static_cast<std::size_t>(c)].erase(r1);
    for (const auto& [c, v] : old2)
      if (!w_[static_cast<std::size_t>(r2)].count(c)) col_rows_[static_cast<std::size_t>(c)].erase(r2);
    for (const auto& [c, v] : w_[static_cast<std::size_t>(r1)]) col_rows_[static_cast<std::size_t>(c)].insert(r1);
    for (const auto& [c, v] : w_[static_cast<std::size_t>(r2)]) col_rows_[static_cast<std::size_t>(c)].insert(r2);
  }

  // det(p*ss - q*rr) must be +1 for the inverse bookkeeping below.
  void two_rows_op(int r1, int r2, const Int& p, const Int& q, const Int& rr, const Int& ss) {
    w_two_rows(r1, r2, p, q, rr, ss);
    if (track_) {
      rows_two_op(u_, r1, r2, p, q, rr, ss);
      rows_two_op(uinv_t_, r1, r2, ss, -rr, -q, p);
    }
  }

  // cols (c1, c2) <- (p*c1 + q*c2, rr*c1 + ss*c2); det(p*ss - q*rr) must be +1.
  void two_cols_op(int c1, int c2, const Int& p, const Int& q, const Int& rr, const Int& ss) {
    std::vector<int> touched(col_rows_[static_cast<std::size_t>(c1)].begin(),
                             col_rows_[static_cast<std::size_t>(c1)].end());
    for (int r : col_rows_[static_cast<std::size_t>(c2)])
      if (!col_rows_[static_cast<std::size_t>(c1)].count(r)) touched.push_back(r);
    for (int r : touched) {
      Int va = get_w(r, c1), vb = get_w(r, c2);
      set_w(r, c1, p * va + q * vb);
      set_w(r, c2, rr * va + ss * vb);
    }
    if (track_) {
      rows_two_op(v_t_, c1, c2, p, q, rr, ss);
      rows_two_op(vinv_, c1, c2, ss, -rr, -q, p);
    }
  }

  void swap_rows_op(int r1, int r2) {
    if (r1 == r2) return;
    for (const auto& [c, v] : w_[static_cast<std::size_t>(r1)]) col_rows_[static_cast<std::size_t>(c)].erase(r1);
    for (const auto& [c, v] : w_[static_cast<std::size_t>(r2)]) col_rows_[static_cast<std::size_t>(c)].erase(r2);
    std::swap(w_[static_cast<std::size_t>(r1)], w_[static_cast<std::size_t>(r2)]);
    for (const auto& [c, v] : w_[static_cast<std::size_t>(r1)]) col_rows_[static_cast<std::size_t>(c)].insert(r1);
    for (const auto& [c, v] : w_[static_cast<std::size_t>(r2)]) col_rows_[static_cast<std::size_t>(c)].insert(r2);
    if (track_) {
      std::swap(u_[static_cast<std::size_t>(r1)], u_[static_cast<std::size_t>(r2)]);
      std::swap(uinv_t_[static_cast<std::size_t>(r1)], uinv_t_[static_cast<std::size_t>(r2)]);
    }
  }

  void swap_cols_op(int c1, int c2) {
    if (c1 == c2) return;
    std::vector<int> touched(col_rows_[static_cast<std::size_t>(c1)].begin(),
                             col_rows_[static_cast<std::size_t>(c1)].end());
    for (int r : col_rows_[static_cast<std::size_t>(c2)])
      if (!col_rows_[static_cast<std::size_t>(c1)].count(r)) touched.push_back(r);
    for (int r : touched) {
      Int va = get_w(r, c1), vb = get_w(r, c2);
      set_w(r, c1, std::move(vb));
      set_w(r, c2, std::move(va));
    }
    if (track_) {
      std::swap(v_t_[static_cast<std::size_t>(c1)], v_t_[static_cast<std::size_t>(c2)]);
      std::swap(vinv_[static_cast<std::size_t>(c1)], vinv_[static_cast<std::size_t>(c2)]);
    }
  }

  void negate_row_op(int r) {
    for (auto& [c, v] : w_[static_cast<std::size_t>(r)]) v = -v;
    if (track_) {
      for (auto& [c, v] : u_[static_cast<std::size_t>(r)]) v = -v;
      for (auto& [c, v] : uinv_t_[static_cast<std::size_t>(r)]) v = -v;
    }
  }

  std::optional<std::pair<int, int>> select_pivot(int t) const {
    bool found = false;
    Int best_abs = 0;
    long long best_fill = 0;
    int br = -1, bc = -1;
    for (int r = t; r < nrows_; ++r) {
      for (const auto& [c, v] : w_[static_cast<std::size_t>(r)]) {
        if (c < t) throw InternalError("smith: stale entry left of the active region");
        Int a = abs(v);
        long long fill =
            static_cast<long long>(w_[static_cast<std::size_t>(r)].size() - 1) *
            static_cast<long long>(col_rows_[static_cast<std::size_t>(c)].size() - 1);
        if (!found || a < best_abs || (a == best_abs && fill < best_fill)) {
          found = true;
          best_abs = a;
          best_fill = fill;
          br = r;
          bc = c;
        }
      }
    }
    if (!found) return std::nullopt;
    return std::make_pair(br, bc);
  }

  // Eliminate everything in row t and column t except (t, t).  Fill-in from
  // the column phase re-dirties the row phase and vice versa, but each gcd
  // step strictly shrinks |w[t][t]|, so the loop terminates.
  void clear_position(int t) {
    auto& col = col_rows_[static_cast<std::size_t>(t)];
    auto& row = w_[static_cast<std::size_t>(t)];
    for (int guard = 0; guard < 1000000; ++guard) {
      if (!col.count(t) || !row.count(t)) throw InternalError("smith: lost the pivot");
      if (col.size() > 1) {
        int r = *col.begin() == t ? *std::next(col.begin()) : *col.begin();
        Int a = row.at(t);
        Int b = w_[static_cast<std::size_t>(r)].at(t);
        if (b % a == 0)
          two_rows_op(t, r, 1, 0, -(b / a), 1);
        else {
          auto [g, x, y] = extended_gcd(a, b);
          two_rows_op(t, r, x, y, -(b / g), a / g);
        }
        continue;
      }
      if (row.size() > 1) {
        int c = row.begin()->first == t ? std::next(row.begin())->first : row.begin()->first;
        Int a = row.at(t);
        Int b = row.at(c);
        if (b % a == 0)
          two_cols_op(t, c, 1, 0, -(b / a), 1);
        else {
          auto [g, x, y] = extended_gcd(a, b);
          two_cols_op(t, c, x, y, -(b / g), a / g);
        }
        continue;
      }
      return;
    }
    throw InternalError("smith: elimination did not terminate");
  }

  // diag(a, b) with a not dividing b  ->  diag(gcd, lcm), bubbled to a chain.
  void smooth_divisibility() {
    for (int pass = 0; pass <= rank_ * rank_ + 8; ++pass) {
      bool changed = false;
      for (int i = 0; i + 1 < rank_; ++i) {
        Int a = w_[static_cast<std::size_t>(i)].at(i);
        Int b = w_[static_cast<std::size_t>(i + 1)].at(i + 1);
        if (b % a == 0) continue;
        two_cols_op(i, i + 1, 1, 1, 0, 1);
        clear_position(i);
        if (w_[static_cast<std::size_t>(i)].at(i) < 0) negate_row_op(i);
        if (w_[static_cast<std::size_t>(i + 1)].at(i + 1) < 0) negate_row_op(i + 1);
        changed = true;
      }
      if (!changed) return;
    }
    throw InternalError("smith: divisibility smoothing did not converge");
  }

  int nrows_, ncols_;
  bool track_;
  int rank_ = 0;
  SparseRows w_;
  std::vector<std::set<int>> col_rows_;
  // D = U*A*V throughout: row ops hit u_ directly and uinv_t_ transposed;
  // column ops hit v_t_ transposed and vinv_ directly.
  SparseRows u_, uinv_t_, v_t_, vinv_;
};

}  // namespace detail

inline SNFResult smith_normal_form(const IntMatrix& a, Transforms t = Transforms::kNone) {
  detail::SmithWorker w(a, t == Transforms::kFull);
  w.run();
  return w.result();
}

// Particular integer solution of A x = b, if one exists.
inline std::optional<std::vector<Int>> solve(const IntMatrix& a, const std::vector<Int>& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw std::invalid_argument("solve: vector length mismatch");
  auto snf = smith_normal_form(a, Transforms::kFull);
  std::vector<Int> c = snf.u->apply(b);
  std::vector<Int> y(static_cast<std::size_t>(a.cols()), Int(0));
  for (int i = 0; i < snf.rank; ++i) {
    const Int& d = snf.diag[static_cast<std::size_t>(i)];
    if (c[static_cast<std::size_t>(i)] % d != 0) return std::nullopt;
    y[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] / d;
  }
  for (int i = snf.rank; i < a.rows(); ++i)
    if (c[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  return snf.v->apply(y);
}

}  // namespace macring
