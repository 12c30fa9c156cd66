#include "bu_scan_common.hpp"

namespace hurwitz::kernels {

std::vector<std::vector<SmallTriple>> bu_box_scan_serial(std::span<const BUEquation> eqs,
                                                        std::int64_t bound) {
  std::vector<std::vector<SmallTriple>> out;
  out.reserve(eqs.size());
  for (const BUEquation& eq : eqs) out.push_back(detail::scan_one(eq, bound));
  return out;
}

}  // namespace hurwitz::kernels
