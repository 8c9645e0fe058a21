#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "macring/abelian_group.hpp"
#include "macring/errors.hpp"
#include "macring/int_matrix.hpp"
#include "macring/smith.hpp"

namespace macring {

// Cohomology ker(d_out) / im(d_in) of the two-step integer fragment
//
//     C_in --d_in--> C_mid --d_out--> C_out.
//
// With representatives, also carries enough of the reduction to express any
// cocycle in the chosen generators:  writing SNF(d_out) = U_o D_o V_o, the
// kernel is spanned by the last K columns of V_o; M = the corresponding rows
// of V_o^{-1} d_in presents the quotient, and SNF(M) = U_m D_m V_m picks the
// generators (columns of U_m^{-1} with invariant factor != 1, torsion first
// in ascending order, then the free ones).
struct CohomologyData {
  AbelianGroup group;

  bool has_representatives = false;
  // Per generator: coordinates in the middle basis, and the order (0 = Z).
  std::vector<std::vector<Int>> representatives;
  std::vector<Int> orders;

  int n_mid = 0;
  int rank_out = 0;
  IntMatrix vo_inv;         // n_mid x n_mid
  IntMatrix u_m;            // K x K, K = n_mid - rank_out
  std::vector<Int> m_diag;  // invariant factors of the presentation matrix
  std::vector<int> kept;    // kernel-coordinate index per generator

  // Coordinates of a cocycle in the generator list: torsion coordinates are
  // reduced into [0, order), free ones are exact integers.
  std::vector<Int> coordinates_of(const std::vector<Int>& z) const {
    if (!has_representatives) throw InternalError("coordinates_of: no representatives computed");
    if (static_cast<int>(z.size()) != n_mid)
      throw std::invalid_argument("coordinates_of: vector length mismatch");
    if (n_mid == 0) return {};
    std::vector<Int> y = vo_inv.apply(z);
    for (int i = 0; i < rank_out; ++i)
      if (y[static_cast<std::size_t>(i)] != 0)
        throw InternalError("coordinates_of: input is not a cocycle");
    std::vector<Int> tail(y.begin() + rank_out, y.end());
    std::vector<Int> w = u_m.apply(tail);
    std::vector<Int> coords;
    coords.reserve(kept.size());
    for (std::size_t g = 0; g < kept.size(); ++g) {
      const Int& wk = w[static_cast<std::size_t>(kept[g])];
      coords.push_back(orders[g] != 0 ? mod_floor(wk, orders[g]) : wk);
    }
    return coords;
  }
};

inline CohomologyData cohomology_at(const IntMatrix& d_in, const IntMatrix& d_out,
                                    bool with_representatives = false) {
  if (d_in.rows() != d_out.cols())
    throw std::invalid_argument("cohomology_at: middle dimension mismatch");
  if (!(d_out * d_in).is_zero())
    throw std::invalid_argument("cohomology_at: d_out * d_in != 0");

  CohomologyData out;
  out.n_mid = d_out.cols();
  out.has_representatives = with_representatives;
  if (out.n_mid == 0) return out;

  if (!with_representatives) {
    auto so = smith_normal_form(d_out);
    auto si = smith_normal_form(d_in);
    out.group = AbelianGroup::from_parts(out.n_mid - so.rank - si.rank, si.diag);
    return out;
  }

  auto so = smith_normal_form(d_out, Transforms::kFull);
  const int r_o = so.rank;
  const int kdim = out.n_mid - r_o;

  IntMatrix y = (*so.v_inv) * d_in;
  for (const auto& [rc, v] : y.entries())
    if (rc.first < r_o) throw InternalError("cohomology_at: image not inside the kernel");
  IntMatrix m = y.rows_from(r_o);  // kdim x n_in

  auto sm = smith_normal_form(m, Transforms::kFull);
  out.group = AbelianGroup::from_parts(kdim - sm.rank, sm.diag);
  out.rank_out = r_o;
  out.vo_inv = *so.v_inv;
  out.u_m = *sm.u;
  out.m_diag = sm.diag;

  for (int k = 0; k < kdim; ++k) {
    Int order = k < sm.rank ? sm.diag[static_cast<std::size_t>(k)] : Int(0);
    if (order == 1) continue;
    out.kept.push_back(k);
    out.orders.push_back(order);
    std::vector<Int> kc = sm.u_inv->column(k);
    std::vector<Int> rep(static_cast<std::size_t>(out.n_mid), Int(0));
    for (int t = 0; t < kdim; ++t) {
      if (kc[static_cast<std::size_t>(t)] == 0) continue;
      std::vector<Int> vcol = so.v->column(r_o + t);
      for (int r = 0; r < out.n_mid; ++r)
        rep[static_cast<std::size_t>(r)] += kc[static_cast<std::size_t>(t)] * vcol[static_cast<std::size_t>(r)];
    }
    out.representatives.push_back(std::move(rep));
  }
  if (static_cast<int>(out.kept.size()) != out.group.rank + static_cast<int>(out.group.torsion.size()))
    throw InternalError("cohomology_at: generator count disagrees with the group");
  return out;
}

}  // namespace macring
