#include "hurwitz/baragar_umeda.hpp"

#include <algorithm>
#include <numeric>

namespace hurwitz::bu {

namespace {

void require(const BUEquation& eq, const Triple& t) {
  for (const Int& v : t) {
    if (sgn(v) <= 0) throw ValidationError("coordinates must be positive");
  }
  Int r = eval_residual(eq, t);
  if (r != 0) throw NotASolution(std::move(r));
}

bool fundamental_unchecked(const BUEquation& eq, const Triple& t) {
  const Int d = eq.d();
  return 2 * eq.a() * t[0] <= d * t[1] * t[2] && 2 * eq.b() * t[1] <= d * t[0] * t[2] &&
         2 * eq.c() * t[2] <= d * t[0] * t[1];
}

void finish(std::vector<Triple>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Pins coordinate `pivot` to v and collects the completions.
void pivot_solve(const BUEquation& eq, std::size_t pivot, const Int& v, const Int& cap,
                 Search& out) {
  const auto& co = eq.coeffs();
  const std::size_t o1 = pivot == 0 ? 1 : 0;
  const std::size_t o2 = pivot == 2 ? 1 : 2;
  const Int c1 = co[pivot] * v * v - eq.e();
  const Int c2 = eq.d() * v;
  auto place = [&](const Int& y, const Int& z) {
    Triple t;
    t[pivot] = v;
    t[o1] = y;
    t[o2] = z;
    if (eval_residual(eq, t) == 0 && fundamental_unchecked(eq, t)) out.solutions.push_back(t);
  };

  if (sgn(c1) > 0) {
    for (const auto& [y, z] : solve_residual_pair({co[o1], co[o2], c1, c2})) place(y, z);
    return;
  }
  if (sgn(c1) < 0 || c2 * c2 != 4 * Int(co[o1]) * co[o2]) return;

  // p y^2 - c2 y z + q z^2 = 0 with a double root: y = c2 z / (2p).
  out.unbounded = true;
  const Int two_p = 2 * Int(co[o1]);
  for (Int z = 1; v + z < cap; ++z) {
    const Int num = c2 * z;
    if (!mpz_divisible_p(num.get_mpz_t(), two_p.get_mpz_t())) continue;
    const Int y = num / two_p;
    if (v + y + z > cap) continue;
    place(y, z);
  }
}

Search gh_route(const BUEquation& eq, const Int& cap) {
  const auto& co = eq.coeffs();
  Search out{eq, {}, false, std::nullopt, cap};
  const bool coprime = std::gcd(co[0], co[1]) == 1 && std::gcd(co[0], co[2]) == 1 &&
                       std::gcd(co[1], co[2]) == 1;
  if (coprime) {
    const GHEquation gh = GHEquation::make({co[0], co[1], co[2]}, eq.d(), 0);
    for (const Tuple& t : enumerate_fundamental(gh, Canonical::raw, Execution::serial).solutions) {
      out.solutions.push_back({t[0], t[1], t[2]});
    }
    return out;
  }
  // Weaker gcd hypothesis: search directly. The smallest coordinate v still
  // satisfies d v <= a + b + c.
  const Coeff sum = co[0] + co[1] + co[2];
  for (std::size_t pivot = 0; pivot < 3; ++pivot) {
    for (Coeff v = 1; eq.d() * v <= sum; ++v) pivot_solve(eq, pivot, Int(v), cap, out);
  }
  finish(out.solutions);
  return out;
}

}  // namespace

bool is_fundamental(const BUEquation& eq, const Triple& t) {
  require(eq, t);
  return fundamental_unchecked(eq, t);
}

Triple apply_involution(const BUEquation& eq, const Triple& t, Axis axis) {
  require(eq, t);
  const std::size_t i = static_cast<std::size_t>(axis);
  const std::size_t j = i == 0 ? 1 : 0;
  const std::size_t k = i == 2 ? 1 : 2;
  Triple out = t;
  out[i] = Int(eq.d() / eq.coeffs()[i]) * t[j] * t[k] - t[i];
  if (sgn(out[i]) <= 0) {
    throw DomainError("involution on axis " + std::string(1, "xyz"[i]) +
                      " gives non-positive coordinate " + out[i].get_str());
  }
  require(eq, out);
  return out;
}

std::optional<E4Family> E4Family::match(const BUEquation& eq) {
  if (eq.a() == 1 && eq.b() == eq.d() && eq.c() == eq.d() && eq.e() == 4) {
    return E4Family{eq.d()};
  }
  return std::nullopt;
}

BUEquation E4Family::equation() const { return BUEquation::make(1, d, d, d, 4); }

Triple E4Family::member(const Int& n) const {
  if (sgn(n) <= 0) throw ValidationError("family index must be positive");
  return {Int(2), n, n};
}

bool E4Family::member_is_fundamental(const Int& n) const { return d * n * n >= 4; }

Search enumerate_fundamental(const BUEquation& eq, const Int& height_cap) {
  if (height_cap < 3) throw ValidationError("height cap must be at least 3");
  if (eq.e() == 0) return gh_route(eq, height_cap);

  Search out{eq, {}, false, E4Family::match(eq), height_cap};
  const auto& co = eq.coeffs();
  for (std::size_t pivot = 0; pivot < 3; ++pivot) {
    for (Coeff v = 1; co[pivot] * v * v <= 8; ++v) pivot_solve(eq, pivot, Int(v), height_cap, out);
  }
  finish(out.solutions);
  return out;
}

std::vector<Search> classify(Coeff e, const ClassifyBounds& bounds, Execution exec) {
  if (e == 0) throw ValidationError("e = 0 is the generalized Hurwitz case; use classify_coefficients");
  if (e >= 5) return {};

  std::vector<BUEquation> candidates;
  for (Coeff a = 1; a <= bounds.c_max; ++a) {
    for (Coeff b = a; b <= bounds.c_max; ++b) {
      for (Coeff c = b; c <= bounds.c_max; ++c) {
        if (std::gcd(std::gcd(a, b), c) != 1) continue;
        const Coeff l = std::lcm(std::lcm(a, b), c);
        for (Coeff d = l; d * d <= 8 * b * c; d += l) candidates.push_back(BUEquation::make(a, b, c, d, e));
      }
    }
  }

  std::vector<std::optional<Search>> found(candidates.size());
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(candidates.size());
#pragma omp parallel for schedule(dynamic, 16) if (exec == Execution::parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    Search s = enumerate_fundamental(candidates[static_cast<std::size_t>(i)], bounds.height_cap);
    if (!s.solutions.empty() || s.unbounded) found[static_cast<std::size_t>(i)] = std::move(s);
  }
  std::vector<Search> out;
  for (auto& s : found) {
    if (s) out.push_back(std::move(*s));
  }
  return out;
}

Search canonical_order(const Search& s) {
  std::array<std::size_t, 3> perm{0, 1, 2};
  const auto& co = s.equation.coeffs();
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t l, std::size_t r) { return co[l] < co[r]; });
  Search out = s;
  out.equation = BUEquation::make(co[perm[0]], co[perm[1]], co[perm[2]], s.equation.d(), s.equation.e());
  for (Triple& t : out.solutions) {
    const Triple old = t;
    for (std::size_t i = 0; i < 3; ++i) t[i] = old[perm[i]];
  }
  finish(out.solutions);
  return out;
}

}  // namespace hurwitz::bu
