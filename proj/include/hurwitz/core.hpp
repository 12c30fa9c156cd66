#pragma once

// Equation and solution types for
//
//   a_1 x_1^2 + ... + a_n x_n^2 = d x_1 ... x_n - k      (generalized Hurwitz)
//   a x^2 + b y^2 + c z^2       = d x y z + e            (Baragar-Umeda)
//
// Solution coordinates are always arbitrary precision; coefficients are
// machine words because every search in this library bounds them tightly.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hurwitz {

using Int = mpz_class;
using Coeff = std::uint64_t;
using Tuple = std::vector<Int>;
using Triple = std::array<Int, 3>;

/// Base class for every error that is a property of the mathematical input
/// (as opposed to a usage error or I/O failure).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Thrown when an operation that requires a solution receives a tuple with a
/// nonzero residual. The residual is kept for diagnostics.
class NotASolution : public DomainError {
 public:
  explicit NotASolution(Int residual);
  const Int& residual() const noexcept { return residual_; }

 private:
  Int residual_;
};

class GHEquation {
 public:
  /// Validates a_i | d, pairwise coprimality and n >= 3.
  static GHEquation make(std::vector<Coeff> a, Coeff d, Coeff k = 0);

  std::size_t arity() const noexcept { return a_.size(); }
  std::span<const Coeff> coeffs() const noexcept { return a_; }
  Coeff coeff(std::size_t i) const { return a_.at(i); }
  Coeff d() const noexcept { return d_; }
  Coeff k() const noexcept { return k_; }
  bool is_hurwitz() const noexcept { return hurwitz_; }
  /// a_1 + ... + a_n
  Coeff coeff_sum() const noexcept { return sum_; }

  std::string to_string() const;

  friend bool operator==(const GHEquation&, const GHEquation&) = default;

 private:
  GHEquation(std::vector<Coeff> a, Coeff d, Coeff k);

  std::vector<Coeff> a_;
  Coeff d_;
  Coeff k_;
  Coeff sum_;
  bool hurwitz_;
};

/// validate_equation: same as GHEquation::make.
GHEquation validate_equation(std::vector<Coeff> a, Coeff d, Coeff k = 0);

/// The Hurwitz equation x_1^2 + ... + x_n^2 = d x_1 ... x_n.
GHEquation hurwitz_equation(std::size_t n, Coeff d);

Int height(std::span<const Int> x);

/// sum a_i x_i^2 - d prod x_i + k. Zero exactly on solutions.
Int eval_residual(const GHEquation& eq, std::span<const Int> x);

bool is_solution(const GHEquation& eq, std::span<const Int> x);

/// Throws NotASolution (or ValidationError on shape problems).
void require_solution(const GHEquation& eq, std::span<const Int> x);

/// Folding k into k extra unit coefficients whose coordinates are pinned to 1.
struct KElimination {
  GHEquation equation;
  std::size_t padding;

  Tuple embed(std::span<const Int> x) const;
};

/// Rejects k = 0: there is nothing to eliminate.
KElimination eliminate_k(const GHEquation& eq);

struct Descaled {
  GHEquation equation;
  Tuple solution;
};

/// Supports exactly two maps:
///   x^2+y^2+z^2 = xyz    -> x^2+y^2+z^2 = 3xyz    (coordinates / 3)
///   x^2+y^2+2z^2 = 2xyz  -> x^2+y^2+2z^2 = 4xyz   (coordinates / 2)
Descaled descale_solution(const GHEquation& eq, std::span<const Int> x);

class BUEquation {
 public:
  /// Validates a|d, b|d, c|d and gcd(a, b, c) = 1. e may be zero.
  static BUEquation make(Coeff a, Coeff b, Coeff c, Coeff d, Coeff e);

  Coeff a() const noexcept { return coeffs_[0]; }
  Coeff b() const noexcept { return coeffs_[1]; }
  Coeff c() const noexcept { return coeffs_[2]; }
  Coeff d() const noexcept { return d_; }
  Coeff e() const noexcept { return e_; }
  const std::array<Coeff, 3>& coeffs() const noexcept { return coeffs_; }

  std::string to_string() const;

  friend bool operator==(const BUEquation&, const BUEquation&) = default;
  friend auto operator<=>(const BUEquation&, const BUEquation&) = default;

 private:
  BUEquation(std::array<Coeff, 3> coeffs, Coeff d, Coeff e)
      : coeffs_(coeffs), d_(d), e_(e) {}

  std::array<Coeff, 3> coeffs_;
  Coeff d_;
  Coeff e_;
};

/// a x^2 + b y^2 + c z^2 - d x y z - e
Int eval_residual(const BUEquation& eq, const Triple& t);

/// Result of pulling square factors out of the coefficients. Coordinates
/// map as x' = scale * x; `identity` is set when nothing had to change.
struct SquarefreeResult {
  BUEquation equation;
  std::array<Coeff, 3> scale;
  bool identity;

  Triple forward(const Triple& t) const;
  /// Empty when some coordinate is not divisible by its scale.
  std::optional<Triple> inverse(const Triple& t) const;
};

SquarefreeResult squarefree_normalize(const BUEquation& eq);

// Small number-theory helpers shared by the modules.
bool is_squarefree(Coeff v);
/// Floor square root; exact, no floating point.
Int isqrt(const Int& v);
/// Returns the root when v is a perfect square.
std::optional<Int> exact_sqrt(const Int& v);

}  // namespace hurwitz
