#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace macring {

using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

// (g, x, y) with x*a + y*b == g and g == gcd(a, b) >= 0.
struct ExtendedGcd {
  Int g, x, y;
};

inline ExtendedGcd extended_gcd(Int a, Int b) {
  Int old_r = std::move(a), r = std::move(b);
  Int old_x = 1, x = 0;
  Int old_y = 0, y = 1;
  while (r != 0) {
    Int q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_x -= q * x;
    std::swap(old_x, x);
    old_y -= q * y;
    std::swap(old_y, y);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  return {std::move(old_r), std::move(old_x), std::move(old_y)};
}

// Representative of a mod n in [0, n); pre: n > 0.
inline Int mod_floor(const Int& a, const Int& n) {
  Int r = a % n;
  if (r < 0) r += n;
  return r;
}

inline std::int64_t to_int64_checked(const Int& v) {
  if (v < std::numeric_limits<std::int64_t>::min() ||
      v > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error("integer too large to serialize: " + v.str());
  return v.convert_to<std::int64_t>();
}

}  // namespace macring
