#include <cstdlib>
#include <string>

#include <omp.h>

#include "prefix_common.hpp"

namespace hurwitz::kernels {

std::vector<Tuple> solve_prefixes_omp(const GHEquation& eq, std::span<const PrefixJob> jobs,
                                      Acceptance accept) {
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(jobs.size());
  std::vector<std::vector<Tuple>> per_thread(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    auto& local = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      detail::solve_job(eq, jobs[static_cast<std::size_t>(i)], accept, local);
    }
  }
  std::vector<Tuple> out;
  for (auto& part : per_thread) {
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  return out;
}

void configure_threads_from_env() {
  if (const char* v = std::getenv("HURWITZ_THREADS")) {
    try {
      const int n = std::stoi(v);
      if (n > 0) omp_set_num_threads(n);
    } catch (const std::exception&) {
      // ignored: fall back to the OpenMP default
    }
  }
}

}  // namespace hurwitz::kernels
