// Serial vs OpenMP timings for the search kernels.
//   bench_kernels [repeats]
// Thread count follows OMP_NUM_THREADS / HURWITZ_THREADS.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>

#include <omp.h>

#include "hurwitz/baragar_umeda.hpp"
#include "hurwitz/enumerate.hpp"
#include "hurwitz/kernels.hpp"

using namespace hurwitz;

namespace {

double best_of(int repeats, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    best = std::min(best, dt.count());
  }
  return best;
}

void row(const std::string& name, double serial, double parallel) {
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed
            << std::setprecision(4) << std::setw(10) << serial << std::setw(10) << parallel
            << std::setw(8) << std::setprecision(2) << serial / parallel << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
  kernels::configure_threads_from_env();
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::cout << "threads " << omp_get_max_threads() << ", best of " << repeats << "\n";
  std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(10) << "serial"
            << std::setw(10) << "omp" << std::setw(9) << "speedup\n";

  for (std::size_t n : {60, 95, 140}) {
    const GHEquation eq = hurwitz_equation(n, 1);
    std::size_t a = 0, b = 0;
    const double s = best_of(repeats, [&] {
      a = enumerate_fundamental(eq, Canonical::sorted, Execution::serial).solutions.size();
    });
    const double p = best_of(repeats, [&] {
      b = enumerate_fundamental(eq, Canonical::sorted, Execution::parallel).solutions.size();
    });
    if (a != b) std::cerr << "mismatch at n=" << n << "\n";
    row("hurwitz sorted n=" + std::to_string(n) + " d=1", s, p);
  }

  {
    const double s = best_of(repeats, [] { count_A(30, Execution::serial); });
    const double p = best_of(repeats, [] { count_A(30, Execution::parallel); });
    row("A(30)", s, p);
  }
  {
    const double s = best_of(repeats, [] { classify_coefficients(5, Execution::serial); });
    const double p = best_of(repeats, [] { classify_coefficients(5, Execution::parallel); });
    row("classify arity 5", s, p);
  }
  {
    const double s = best_of(repeats, [] { bu::classify(1, {}, Execution::serial); });
    const double p = best_of(repeats, [] { bu::classify(1, {}, Execution::parallel); });
    row("bu classify e=1", s, p);
  }
  {
    std::vector<BUEquation> eqs;
    for (Coeff c = 1; c <= 12; ++c) {
      for (Coeff d = c; d <= 24; d += c) eqs.push_back(BUEquation::make(1, c, c, d, 5));
    }
    const double s = best_of(repeats, [&] { kernels::bu_box_scan_serial(eqs, 24); });
    const double p = best_of(repeats, [&] { kernels::bu_box_scan_omp(eqs, 24); });
    row("bu box scan " + std::to_string(eqs.size()) + " eqs, bound 24", s, p);
  }
  return 0;
}
