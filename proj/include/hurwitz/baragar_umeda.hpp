#pragma once

// Fundamental solutions of a x^2 + b y^2 + c z^2 = d x y z + e.
//
// A fundamental triple satisfies 2ax <= dyz, 2by <= dxz, 2cz <= dxy. Writing
// the smallest scaled coordinate as m v^2 (m the matching coefficient), every
// fundamental triple with e >= 1 has m v^2 <= 8, so the search pins that
// coordinate and solves the remaining binary form
//
//   p y^2 + q z^2 + (m v^2 - e) = (d v) y z.
//
// When m v^2 = e and (dv)^2 = 4pq the form is a perfect square and the
// equation has infinitely many fundamental solutions; those searches are
// flagged `unbounded` and list members only up to a height cap.

#include <optional>
#include <vector>

#include "hurwitz/core.hpp"
#include "hurwitz/enumerate.hpp"

namespace hurwitz::bu {

enum class Axis { x, y, z };

/// Throws NotASolution for non-solutions.
bool is_fundamental(const BUEquation& eq, const Triple& t);

/// Vieta image along one axis. Throws DomainError when the new coordinate is
/// not positive, which can happen here for e > 0.
Triple apply_involution(const BUEquation& eq, const Triple& t, Axis axis);

/// x^2 + d y^2 + d z^2 = d x y z + 4 and its solutions (2, n, n).
struct E4Family {
  Coeff d;

  static std::optional<E4Family> match(const BUEquation& eq);
  BUEquation equation() const;
  Triple member(const Int& n) const;
  /// d n^2 >= 4
  bool member_is_fundamental(const Int& n) const;
};

struct Search {
  BUEquation equation;
  std::vector<Triple> solutions;  ///< lexicographic
  bool unbounded = false;         ///< an infinite family exists; listing is capped
  std::optional<E4Family> family;
  Int height_cap;
};

Search enumerate_fundamental(const BUEquation& eq, const Int& height_cap = 100);

struct ClassifyBounds {
  Coeff c_max = 40;
  Int height_cap = 60;
};

/// Equations with a <= b <= c <= c_max, gcd(a,b,c) = 1, d a multiple of
/// lcm(a,b,c) with d^2 <= 8bc, and a nonempty fundamental set. e >= 5 gives
/// nothing. e = 0 is rejected (use the generalized Hurwitz search).
std::vector<Search> classify(Coeff e, const ClassifyBounds& bounds = {},
                             Execution exec = Execution::parallel);

/// Reorders the coefficients ascending (stable) and permutes the solution
/// coordinates to match.
Search canonical_order(const Search& s);

}  // namespace hurwitz::bu
