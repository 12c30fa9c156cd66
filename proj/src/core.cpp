#include "hurwitz/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hurwitz {

NotASolution::NotASolution(Int residual)
    : DomainError("not a solution (residual " + residual.get_str() + ")"),
      residual_(std::move(residual)) {}

GHEquation::GHEquation(std::vector<Coeff> a, Coeff d, Coeff k)
    : a_(std::move(a)), d_(d), k_(k), sum_(0), hurwitz_(true) {
  for (Coeff v : a_) {
    sum_ += v;
    hurwitz_ = hurwitz_ && v == 1;
  }
}

GHEquation GHEquation::make(std::vector<Coeff> a, Coeff d, Coeff k) {
  if (a.size() < 3) {
    throw ValidationError("arity must be at least 3, got " + std::to_string(a.size()));
  }
  if (d == 0) throw ValidationError("d must be positive");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) throw ValidationError("coefficients must be positive");
    if (d % a[i] != 0) {
      throw ValidationError("a_" + std::to_string(i + 1) + " = " + std::to_string(a[i]) +
                            " does not divide d = " + std::to_string(d));
    }
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (std::gcd(a[i], a[j]) != 1) {
        throw ValidationError("gcd(a_" + std::to_string(i + 1) + ", a_" + std::to_string(j + 1) +
                              ") = " + std::to_string(std::gcd(a[i], a[j])) + " is not 1");
      }
    }
  }
  return GHEquation(std::move(a), d, k);
}

std::string GHEquation::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i) os << " + ";
    if (a_[i] != 1) os << a_[i];
    os << "x" << (i + 1) << "^2";
  }
  os << " = ";
  if (d_ != 1) os << d_;
  for (std::size_t i = 0; i < a_.size(); ++i) os << "x" << (i + 1);
  if (k_) os << " - " << k_;
  return os.str();
}

GHEquation validate_equation(std::vector<Coeff> a, Coeff d, Coeff k) {
  return GHEquation::make(std::move(a), d, k);
}

GHEquation hurwitz_equation(std::size_t n, Coeff d) {
  return GHEquation::make(std::vector<Coeff>(n, 1), d, 0);
}

Int height(std::span<const Int> x) {
  Int h = 0;
  for (const Int& v : x) h += v;
  return h;
}

static void check_shape(const GHEquation& eq, std::span<const Int> x) {
  if (x.size() != eq.arity()) {
    throw ValidationError("tuple length " + std::to_string(x.size()) + " does not match arity " +
                          std::to_string(eq.arity()));
  }
  for (const Int& v : x) {
    if (sgn(v) <= 0) throw ValidationError("tuple entries must be positive");
  }
}

Int eval_residual(const GHEquation& eq, std::span<const Int> x) {
  check_shape(eq, x);
  Int lhs = 0;
  Int prod = eq.d();
  for (std::size_t i = 0; i < x.size(); ++i) {
    lhs += eq.coeff(i) * x[i] * x[i];
    prod *= x[i];
  }
  return lhs - prod + eq.k();
}

bool is_solution(const GHEquation& eq, std::span<const Int> x) {
  return sgn(eval_residual(eq, x)) == 0;
}

void require_solution(const GHEquation& eq, std::span<const Int> x) {
  Int r = eval_residual(eq, x);
  if (sgn(r) != 0) throw NotASolution(std::move(r));
}

Tuple KElimination::embed(std::span<const Int> x) const {
  if (x.size() + padding != equation.arity()) {
    throw ValidationError("tuple length does not match the source equation");
  }
  Tuple out(x.begin(), x.end());
  out.resize(equation.arity(), Int(1));
  return out;
}

KElimination eliminate_k(const GHEquation& eq) {
  if (eq.k() == 0) throw ValidationError("k = 0: nothing to eliminate");
  std::vector<Coeff> a(eq.coeffs().begin(), eq.coeffs().end());
  const std::size_t padding = eq.k();
  a.resize(a.size() + padding, 1);
  // Extra unit coefficients keep pairwise coprimality and divide any d.
  return KElimination{GHEquation::make(std::move(a), eq.d(), 0), padding};
}

Descaled descale_solution(const GHEquation& eq, std::span<const Int> x) {
  const std::vector<Coeff> coeffs(eq.coeffs().begin(), eq.coeffs().end());
  Coeff divisor = 0;
  Coeff target_d = 0;
  if (eq.k() == 0 && coeffs == std::vector<Coeff>{1, 1, 1} && eq.d() == 1) {
    divisor = 3;
    target_d = 3;
  } else if (eq.k() == 0 && coeffs == std::vector<Coeff>{1, 1, 2} && eq.d() == 2) {
    divisor = 2;
    target_d = 4;
  } else {
    throw ValidationError("descaling is only defined for x^2+y^2+z^2=xyz and x^2+y^2+2z^2=2xyz");
  }
  require_solution(eq, x);
  Tuple out;
  out.reserve(x.size());
  for (const Int& v : x) {
    if (!mpz_divisible_ui_p(v.get_mpz_t(), divisor)) {
      throw DomainError("coordinate " + v.get_str() + " is not divisible by " +
                        std::to_string(divisor));
    }
    out.push_back(v / divisor);
  }
  GHEquation target = GHEquation::make(coeffs, target_d, 0);
  require_solution(target, out);
  return Descaled{std::move(target), std::move(out)};
}

BUEquation BUEquation::make(Coeff a, Coeff b, Coeff c, Coeff d, Coeff e) {
  if (a == 0 || b == 0 || c == 0 || d == 0) {
    throw ValidationError("a, b, c, d must be positive");
  }
  if (d % a || d % b || d % c) throw ValidationError("a, b and c must divide d");
  if (std::gcd(std::gcd(a, b), c) != 1) throw ValidationError("gcd(a, b, c) must be 1");
  return BUEquation({a, b, c}, d, e);
}

std::string BUEquation::to_string() const {
  std::ostringstream os;
  const char* names[] = {"x", "y", "z"};
  for (int i = 0; i < 3; ++i) {
    if (i) os << " + ";
    if (coeffs_[i] != 1) os << coeffs_[i];
    os << names[i] << "^2";
  }
  os << " = ";
  if (d_ != 1) os << d_;
  os << "xyz";
  if (e_) os << " + " << e_;
  return os.str();
}

Int eval_residual(const BUEquation& eq, const Triple& t) {
  Int r = eq.a() * t[0] * t[0] + eq.b() * t[1] * t[1] + eq.c() * t[2] * t[2];
  r -= eq.d() * t[0] * t[1] * t[2];
  r -= eq.e();
  return r;
}

Triple SquarefreeResult::forward(const Triple& t) const {
  return {t[0] * scale[0], t[1] * scale[1], t[2] * scale[2]};
}

std::optional<Triple> SquarefreeResult::inverse(const Triple& t) const {
  Triple out;
  for (int i = 0; i < 3; ++i) {
    if (!mpz_divisible_ui_p(t[i].get_mpz_t(), scale[i])) return std::nullopt;
    out[i] = t[i] / scale[i];
  }
  return out;
}

bool is_squarefree(Coeff v) {
  for (Coeff p = 2; p * p <= v; ++p) {
    if (v % (p * p) == 0) return false;
  }
  return true;
}

SquarefreeResult squarefree_normalize(const BUEquation& eq) {
  std::array<Coeff, 3> coeffs = eq.coeffs();
  std::array<Coeff, 3> scale{1, 1, 1};
  Coeff d = eq.d();
  // One square prime factor at a time: a_i = p^2 a_i', x_i' = p x_i, d' = d / p.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < 3 && !changed; ++i) {
      for (Coeff p = 2; p * p <= coeffs[i]; ++p) {
        if (coeffs[i] % (p * p) == 0) {
          if (d % p != 0) {
            throw DomainError("square factor " + std::to_string(p) + "^2 of a coefficient does not leave d divisible");
          }
          coeffs[i] /= p * p;
          scale[i] *= p;
          d /= p;
          changed = true;
          break;
        }
      }
    }
  }
  const bool identity = scale == std::array<Coeff, 3>{1, 1, 1};
  // make() re-verifies divisibility and the gcd condition on the result.
  BUEquation out = BUEquation::make(coeffs[0], coeffs[1], coeffs[2], d, eq.e());
  return SquarefreeResult{out, scale, identity};
}

Int isqrt(const Int& v) {
  if (sgn(v) < 0) throw std::domain_error("isqrt of a negative number");
  Int r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

std::optional<Int> exact_sqrt(const Int& v) {
  if (sgn(v) < 0) return std::nullopt;
  Int r, rem;
  mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t());
  if (sgn(rem) != 0) return std::nullopt;
  return r;
}

}  // namespace hurwitz
