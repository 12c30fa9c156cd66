#pragma once

// Data-parallel inner loops. Each kernel has a plain serial version, kept as
// the reference the OpenMP version is tested against.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hurwitz/core.hpp"

namespace hurwitz::kernels {

/// One choice of fixed coordinates. `values` has full arity; the entries at
/// the two free positions are ignored.
struct PrefixJob {
  std::size_t free_first;
  std::size_t free_second;
  Tuple values;
};

enum class Acceptance {
  fundamental,         ///< raw tuples, all inequalities
  fundamental_sorted,  ///< ascending Hurwitz representatives
};

/// Solves each job's residual pair and returns the assembled tuples that pass
/// the acceptance test. Order is unspecified; duplicates possible.
std::vector<Tuple> solve_prefixes_serial(const GHEquation& eq, std::span<const PrefixJob> jobs,
                                         Acceptance accept);
std::vector<Tuple> solve_prefixes_omp(const GHEquation& eq, std::span<const PrefixJob> jobs,
                                      Acceptance accept);

using SmallTriple = std::array<std::int64_t, 3>;

/// For each equation, every (x, y, z) in [1, bound]^3 that solves it and
/// satisfies 2ax <= dyz, 2by <= dxz, 2cz <= dxy. Lexicographic per equation.
std::vector<std::vector<SmallTriple>> bu_box_scan_serial(std::span<const BUEquation> eqs,
                                                        std::int64_t bound);
std::vector<std::vector<SmallTriple>> bu_box_scan_omp(std::span<const BUEquation> eqs,
                                                     std::int64_t bound);

/// Sets the OpenMP thread count from HURWITZ_THREADS when present.
void configure_threads_from_env();

}  // namespace hurwitz::kernels
