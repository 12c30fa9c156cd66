#include "bu_scan_common.hpp"

namespace hurwitz::kernels {

std::vector<std::vector<SmallTriple>> bu_box_scan_omp(std::span<const BUEquation> eqs,
                                                     std::int64_t bound) {
  std::vector<std::vector<SmallTriple>> out(eqs.size());
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(eqs.size());
  // Each slot is written by exactly one iteration.
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = detail::scan_one(eqs[static_cast<std::size_t>(i)], bound);
  }
  return out;
}

}  // namespace hurwitz::kernels
