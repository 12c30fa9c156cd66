#include <doctest.h>

#include <random>

#include "hurwitz/core.hpp"
#include "oracles.hpp"

using namespace hurwitz;

namespace {
Tuple T(std::initializer_list<long> v) {
  Tuple t;
  for (long x : v) t.emplace_back(x);
  return t;
}
}  // namespace

TEST_CASE("validate_equation accepts and rejects") {
  const GHEquation m = validate_equation({1, 1, 1}, 3);
  CHECK(m.is_hurwitz());
  CHECK(m.arity() == 3);
  CHECK(m.coeff_sum() == 3);

  const GHEquation g = validate_equation({1, 2, 3}, 6);
  CHECK_FALSE(g.is_hurwitz());

  CHECK_THROWS_AS(validate_equation({2, 2, 3}, 6), ValidationError);
  CHECK_THROWS_AS(validate_equation({1, 1, 4}, 6), ValidationError);  // 4 does not divide 6
  CHECK_THROWS_AS(validate_equation({1, 1}, 2), ValidationError);
  CHECK_THROWS_AS(validate_equation({1, 0, 1}, 2), ValidationError);
  CHECK_THROWS_AS(validate_equation({1, 1, 1}, 0), ValidationError);
}

TEST_CASE("eval_residual") {
  CHECK(eval_residual(hurwitz_equation(3, 3), T({1, 1, 1})) == 0);
  CHECK(eval_residual(hurwitz_equation(3, 1), T({3, 3, 3})) == 0);
  CHECK(eval_residual(hurwitz_equation(3, 3), T({1, 1, 2})) == 0);
  CHECK(eval_residual(hurwitz_equation(3, 2), T({1, 1, 1})) == 1);
  CHECK(eval_residual(GHEquation::make({1, 1, 1}, 2, 5), T({1, 1, 1})) == 6);
  CHECK_THROWS_AS(eval_residual(hurwitz_equation(3, 3), T({1, 1})), ValidationError);
  CHECK_THROWS_AS(eval_residual(hurwitz_equation(3, 3), T({1, 0, 1})), ValidationError);
  CHECK_THROWS_AS(require_solution(hurwitz_equation(3, 3), T({1, 1, 3})), NotASolution);
  try {
    require_solution(hurwitz_equation(3, 3), T({1, 1, 3}));
  } catch (const NotASolution& e) {
    CHECK(e.residual() == 2);  // 1 + 1 + 9 - 9
  }
}

TEST_CASE("validated equations keep divisibility and coprimality") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Coeff> coeff(1, 12), mult(1, 6), arity(3, 5);
  int accepted = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    std::vector<Coeff> a(arity(rng));
    for (Coeff& v : a) v = coeff(rng);
    Coeff l = 1;
    for (Coeff v : a) l = std::lcm(l, v);
    const Coeff d = l * mult(rng) + (trial % 3 == 0 ? 1 : 0);
    try {
      const GHEquation eq = GHEquation::make(a, d);
      ++accepted;
      for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(d % eq.coeff(i) == 0);
        for (std::size_t j = i + 1; j < a.size(); ++j) CHECK(std::gcd(eq.coeff(i), eq.coeff(j)) == 1);
      }
      CHECK(eq.is_hurwitz() == std::all_of(a.begin(), a.end(), [](Coeff v) { return v == 1; }));
    } catch (const ValidationError&) {
      bool bad = false;
      for (std::size_t i = 0; i < a.size(); ++i) {
        bad = bad || d % a[i] != 0;
        for (std::size_t j = i + 1; j < a.size(); ++j) bad = bad || std::gcd(a[i], a[j]) != 1;
      }
      CHECK(bad);
    }
  }
  CHECK(accepted > 100);
}

TEST_CASE("eliminate_k") {
  const GHEquation src = GHEquation::make({1, 1, 1}, 1, 2);
  const KElimination k = eliminate_k(src);
  CHECK(k.equation.arity() == 5);
  CHECK(k.equation.k() == 0);
  CHECK(k.equation.d() == 1);
  CHECK(k.equation.is_hurwitz());
  CHECK(k.padding == 2);
  CHECK(k.embed(T({3, 3, 3})) == T({3, 3, 3, 1, 1}));
  CHECK_THROWS_AS(eliminate_k(hurwitz_equation(3, 1)), ValidationError);

  // Residual is preserved on every tuple of a small box.
  for (const GHEquation& eq : {GHEquation::make({1, 1, 1}, 1, 2), GHEquation::make({1, 2, 3}, 6, 1),
                               GHEquation::make({1, 1, 5}, 5, 3)}) {
    const KElimination ke = eliminate_k(eq);
    for (long x = 1; x <= 8; ++x) {
      for (long y = 1; y <= 8; ++y) {
        for (long z = 1; z <= 8; ++z) {
          const Tuple t = T({x, y, z});
          CHECK(eval_residual(ke.equation, ke.embed(t)) == eval_residual(eq, t));
        }
      }
    }
  }
}

TEST_CASE("descale_solution") {
  const Descaled a = descale_solution(hurwitz_equation(3, 1), T({3, 3, 3}));
  CHECK(a.equation == hurwitz_equation(3, 3));
  CHECK(a.solution == T({1, 1, 1}));

  const Descaled b = descale_solution(GHEquation::make({1, 1, 2}, 2), T({2, 2, 2}));
  CHECK(b.equation == GHEquation::make({1, 1, 2}, 4));
  CHECK(b.solution == T({1, 1, 1}));

  CHECK_THROWS_AS(descale_solution(hurwitz_equation(3, 1), T({3, 3, 4})), NotASolution);
  CHECK_THROWS_AS(descale_solution(hurwitz_equation(3, 3), T({1, 1, 1})), ValidationError);

  // Bijection on a box: x solves the source iff x / s solves the target.
  struct Case {
    GHEquation src, dst;
    long s;
  };
  for (const Case& c : {Case{hurwitz_equation(3, 1), hurwitz_equation(3, 3), 3},
                        Case{GHEquation::make({1, 1, 2}, 2), GHEquation::make({1, 1, 2}, 4), 2}}) {
    for (long x = 1; x <= 12; ++x) {
      for (long y = 1; y <= 12; ++y) {
        for (long z = 1; z <= 12; ++z) {
          const Tuple big = T({x * c.s, y * c.s, z * c.s});
          const Tuple small = T({x, y, z});
          CHECK(is_solution(c.src, big) == is_solution(c.dst, small));
          if (is_solution(c.src, T({x, y, z}))) {
            CHECK(x % c.s == 0);
            CHECK(y % c.s == 0);
            CHECK(z % c.s == 0);
            CHECK(descale_solution(c.src, T({x, y, z})).solution == T({x / c.s, y / c.s, z / c.s}));
          }
        }
      }
    }
  }
}

TEST_CASE("BUEquation validation") {
  CHECK_NOTHROW(BUEquation::make(1, 5, 5, 5, 1));
  CHECK_NOTHROW(BUEquation::make(2, 2, 3, 6, 1));  // pairwise gcd 2 is allowed here
  CHECK_NOTHROW(BUEquation::make(1, 1, 1, 1, 0));
  CHECK_THROWS_AS(BUEquation::make(2, 4, 6, 12, 1), ValidationError);
  CHECK_THROWS_AS(BUEquation::make(1, 5, 5, 6, 1), ValidationError);
  Triple t{Int(4), Int(1), Int(2)};
  CHECK(eval_residual(BUEquation::make(1, 5, 5, 5, 1), t) == 0);
}

TEST_CASE("squarefree_normalize") {
  const SquarefreeResult a = squarefree_normalize(BUEquation::make(3, 4, 6, 12, 1));
  CHECK_FALSE(a.identity);
  CHECK(a.equation == BUEquation::make(3, 1, 6, 6, 1));
  CHECK(a.scale == std::array<Coeff, 3>{1, 2, 1});

  const SquarefreeResult b = squarefree_normalize(BUEquation::make(1, 8, 8, 8, 1));
  CHECK(b.equation == BUEquation::make(1, 2, 2, 2, 1));
  CHECK(b.scale == std::array<Coeff, 3>{1, 2, 2});

  CHECK(squarefree_normalize(BUEquation::make(1, 2, 2, 2, 1)).identity);

  // Residual-preserving bijection on [1,12]^3.
  for (const BUEquation& eq : {BUEquation::make(3, 4, 6, 12, 1), BUEquation::make(1, 8, 8, 8, 1),
                               BUEquation::make(1, 4, 4, 4, 4)}) {
    const SquarefreeResult r = squarefree_normalize(eq);
    for (long x = 1; x <= 12; ++x) {
      for (long y = 1; y <= 12; ++y) {
        for (long z = 1; z <= 12; ++z) {
          const Triple t{Int(x), Int(y), Int(z)};
          const Triple f = r.forward(t);
          CHECK(eval_residual(r.equation, f) == eval_residual(eq, t));
          CHECK(r.inverse(f) == std::optional<Triple>(t));
        }
      }
    }
  }
}

TEST_CASE("integer square roots") {
  CHECK(isqrt(Int(0)) == 0);
  CHECK(isqrt(Int(15)) == 3);
  CHECK(isqrt(Int(16)) == 4);
  const Int big = Int("123456789012345678901234567890");
  CHECK(exact_sqrt(big * big) == std::optional<Int>(big));
  CHECK_FALSE(exact_sqrt(big * big + 1).has_value());
  CHECK_FALSE(exact_sqrt(Int(-4)).has_value());
  CHECK(is_squarefree(30));
  CHECK_FALSE(is_squarefree(12));
}
