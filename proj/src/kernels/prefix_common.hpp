#pragma once

#include <algorithm>

#include "hurwitz/enumerate.hpp"
#include "hurwitz/kernels.hpp"
#include "hurwitz/vieta.hpp"

namespace hurwitz::kernels::detail {

// Appends every accepted completion of one job to `out`.
inline void solve_job(const GHEquation& eq, const PrefixJob& job, Acceptance accept,
                      std::vector<Tuple>& out) {
  Int c1 = 0;
  Int c2 = eq.d();
  for (std::size_t k = 0; k < job.values.size(); ++k) {
    if (k == job.free_first || k == job.free_second) continue;
    c1 += eq.coeff(k) * job.values[k] * job.values[k];
    c2 *= job.values[k];
  }
  const ResidualInstance inst{eq.coeff(job.free_first), eq.coeff(job.free_second), c1, c2};
  for (auto& [y, z] : solve_residual_pair(inst)) {
    Tuple t = job.values;
    t[job.free_first] = y;
    t[job.free_second] = z;
    if (!is_solution(eq, t)) continue;
    const bool ok = accept == Acceptance::fundamental ? is_fundamental(eq, t)
                                                      : is_fundamental_sorted(eq, t);
    if (ok) out.push_back(std::move(t));
  }
}

}  // namespace hurwitz::kernels::detail
