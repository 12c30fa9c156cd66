#include "prefix_common.hpp"

namespace hurwitz::kernels {

std::vector<Tuple> solve_prefixes_serial(const GHEquation& eq, std::span<const PrefixJob> jobs,
                                         Acceptance accept) {
  std::vector<Tuple> out;
  for (const PrefixJob& job : jobs) detail::solve_job(eq, job, accept, out);
  return out;
}

}  // namespace hurwitz::kernels
