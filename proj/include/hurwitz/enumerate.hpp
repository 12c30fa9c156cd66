#pragma once

// Complete enumeration of fundamental solutions.
//
// Every fundamental solution has its n-2 smallest coordinates z satisfying
// d * z_1 ... z_{n-2} <= a_1 + ... + a_n, which leaves finitely many choices
// for them. With those fixed the remaining pair (y, z) solves the binary form
//
//   p y^2 + q z^2 + c1 = c2 y z,
//
// and a fundamental pair has z <= 2 c1 unless c2 y = 2 q z exactly.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hurwitz/core.hpp"

namespace hurwitz {

enum class Execution { serial, parallel };

struct ResidualInstance {
  Coeff p;  ///< coefficient of y
  Coeff q;  ///< coefficient of z
  Int c1;   ///< sum of a_k x_k^2 over the fixed coordinates, > 0
  Int c2;   ///< d times the product of the fixed coordinates, > 0
};

/// Every (y, z) in N^2 solving the instance with z <= 2 c1, plus the pair on
/// the degenerate branch c2 y = 2 q z. Sorted, no duplicates.
std::vector<std::pair<Int, Int>> solve_residual_pair(const ResidualInstance& inst);

enum class Canonical {
  raw,     ///< ordered tuples, lexicographic
  sorted,  ///< Hurwitz only: ascending representatives
};

struct FundamentalSet {
  GHEquation equation;
  Canonical mode;
  std::vector<Tuple> solutions;

  bool empty() const noexcept { return solutions.empty(); }
};

/// Requires k = 0. Hurwitz equations in raw mode are expanded from the sorted
/// representatives; other equations go through the position-pair search.
FundamentalSet enumerate_fundamental(const GHEquation& eq, Canonical mode = Canonical::raw,
                                     Execution exec = Execution::parallel);

/// The position-pair search on its own: every unordered pair of positions is
/// tried as the free pair. Works for any validated k = 0 equation but is
/// exponential in n for Hurwitz equations.
std::vector<Tuple> enumerate_fundamental_pairs(const GHEquation& eq,
                                               Execution exec = Execution::parallel);

/// All (coefficients, d) of arity n, coefficients ascending, with a nonempty
/// fundamental set. Coefficients above n only occur in the two families
/// (1,...,1,n+2; n+2) and (1,1,1,1,6; 6).
std::vector<FundamentalSet> classify_coefficients(std::size_t n,
                                                  Execution exec = Execution::parallel);

struct HurwitzSolvability {
  bool solvable;
  std::optional<Tuple> fundamental;  ///< ascending
};

/// Closed-form answer for 3 <= n <= 2d, where the orbit is unique.
HurwitzSolvability hurwitz_solvable(std::size_t n, Coeff d);

struct MultiplierCount {
  std::size_t count;
  std::vector<Coeff> witnesses;  ///< the d with a fundamental solution
};

/// Number of d for which the Hurwitz equation of arity n is solvable.
MultiplierCount count_A(std::size_t n, Execution exec = Execution::parallel);

struct TreeNode {
  Tuple tuple;
  std::optional<std::size_t> parent;  ///< position in the output vector
  std::size_t edge;                   ///< involution index from the parent; 0 at the root
  std::size_t depth;
  Int height;
};

struct TreeLimit {
  std::optional<Int> max_height;
  std::optional<std::size_t> max_depth;
};

/// Breadth-first orbit expansion from a fundamental root; children are the
/// psi_i images that raise the height, excluding the edge back to the parent.
std::vector<TreeNode> tree_expand(const GHEquation& eq, std::span<const Int> root,
                                  const TreeLimit& limit);

}  // namespace hurwitz
