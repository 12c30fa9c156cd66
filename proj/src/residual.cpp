#include <algorithm>

#include "hurwitz/enumerate.hpp"

namespace hurwitz {

std::vector<std::pair<Int, Int>> solve_residual_pair(const ResidualInstance& inst) {
  if (inst.p == 0 || inst.q == 0 || sgn(inst.c1) <= 0 || sgn(inst.c2) <= 0) {
    throw ValidationError("residual instance needs positive coefficients and constants");
  }
  const Int p = inst.p;
  const Int q = inst.q;
  std::vector<std::pair<Int, Int>> out;

  // Bounded branch: z <= 2 c1, y from p y^2 - c2 z y + (q z^2 + c1) = 0.
  // The discriminant is (c2^2 - 4pq) z^2 - 4 p c1, negative for every z
  // unless the leading term is positive.
  const Int lead = inst.c2 * inst.c2 - 4 * p * q;
  const Int shift = 4 * p * inst.c1;
  const Int z_max = sgn(lead) > 0 ? Int(2 * inst.c1) : Int(0);
  const Int two_p = 2 * p;
  Int disc, root, num;
  for (Int z = 1; z <= z_max; ++z) {
    disc = lead * z * z - shift;
    if (sgn(disc) < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) continue;
    mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
    for (int sign : {1, -1}) {
      num = inst.c2 * z + sign * root;
      if (sgn(num) > 0 && mpz_divisible_p(num.get_mpz_t(), two_p.get_mpz_t())) {
        out.emplace_back(num / two_p, z);
      }
    }
  }

  // Degenerate branch: z = c2 y / (2 q) and y^2 (c2^2 - 4 p q) = 4 q c1.
  const Int& den = lead;
  if (sgn(den) > 0) {
    const Int rhs = 4 * q * inst.c1;
    if (mpz_divisible_p(rhs.get_mpz_t(), den.get_mpz_t())) {
      if (auto y = exact_sqrt(rhs / den)) {
        const Int zn = inst.c2 * *y;
        const Int two_q = 2 * q;
        if (sgn(*y) > 0 && mpz_divisible_p(zn.get_mpz_t(), two_q.get_mpz_t())) {
          out.emplace_back(*y, zn / two_q);
        }
      }
    }
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace hurwitz
