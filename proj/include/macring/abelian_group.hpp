#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "macring/errors.hpp"
#include "macring/integer.hpp"

namespace macring {

// Finitely generated abelian group in invariant-factor form:
//   Z^rank  +  Z/t1 + ... + Z/tk   with 2 <= t1 | t2 | ... | tk.
struct AbelianGroup {
  int rank = 0;
  std::vector<Int> torsion;

  static AbelianGroup free(int rank) { return {rank, {}}; }

  // Normalizes any list of cyclic orders (each >= 1) into the divisibility
  // chain via repeated (a, b) -> (gcd, lcm) exchanges; ones are dropped.
  static AbelianGroup from_parts(int rank, std::vector<Int> orders) {
    if (rank < 0) throw InternalError("AbelianGroup: negative rank");
    for (const Int& t : orders)
      if (t <= 0) throw InternalError("AbelianGroup: nonpositive torsion order");
    std::sort(orders.begin(), orders.end());
    const std::size_t n = orders.size();
    for (std::size_t pass = 0; pass <= n * n + 8; ++pass) {
      bool changed = false;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          if (orders[j] % orders[i] == 0) continue;
          Int g = gcd(orders[i], orders[j]);
          Int l = orders[i] / g * orders[j];
          orders[i] = std::move(g);
          orders[j] = std::move(l);
          changed = true;
        }
      if (!changed) break;
      if (pass == n * n + 8) throw InternalError("AbelianGroup: smoothing did not converge");
    }
    std::sort(orders.begin(), orders.end());
    std::vector<Int> torsion;
    for (Int& t : orders)
      if (t > 1) torsion.push_back(std::move(t));
    return {rank, std::move(torsion)};
  }

  bool trivial() const { return rank == 0 && torsion.empty(); }

  bool operator==(const AbelianGroup&) const = default;

  std::string str() const {
    if (trivial()) return "0";
    std::string out;
    if (rank == 1)
      out = "Z";
    else if (rank > 1)
      out = "Z^" + std::to_string(rank);
    for (const Int& t : torsion) {
      if (!out.empty()) out += " + ";
      out += "Z/" + t.str();
    }
    return out;
  }
};

}  // namespace macring
