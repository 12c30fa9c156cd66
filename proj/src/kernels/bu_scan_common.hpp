#pragma once

#include "hurwitz/kernels.hpp"

namespace hurwitz::kernels::detail {

inline std::vector<SmallTriple> scan_one(const BUEquation& eq, std::int64_t bound) {
  using wide = __int128;
  const wide a = eq.a(), b = eq.b(), c = eq.c(), d = eq.d(), e = eq.e();
  std::vector<SmallTriple> out;
  for (std::int64_t x = 1; x <= bound; ++x) {
    for (std::int64_t y = 1; y <= bound; ++y) {
      for (std::int64_t z = 1; z <= bound; ++z) {
        const wide lhs = a * x * x + b * y * y + c * z * z;
        const wide rhs = d * x * y * z + e;
        if (lhs != rhs) continue;
        if (2 * a * x <= d * y * z && 2 * b * y <= d * x * z && 2 * c * z <= d * x * y) {
          out.push_back({x, y, z});
        }
      }
    }
  }
  return out;
}

}  // namespace hurwitz::kernels::detail
