#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "hurwitz/enumerate.hpp"
#include "hurwitz/vieta.hpp"

using namespace hurwitz;

namespace {

Tuple T(std::initializer_list<long> v) {
  Tuple t;
  for (long x : v) t.emplace_back(x);
  return t;
}

ReducedWord W(std::vector<std::size_t> v) { return ReducedWord::from_indices(std::move(v)); }

// All alternating words over {1..n} of exactly `len` letters.
std::vector<std::vector<std::size_t>> words(std::size_t n, std::size_t len) {
  std::vector<std::vector<std::size_t>> out{{}};
  for (std::size_t step = 0; step < len; ++step) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& w : out) {
      for (std::size_t i = 1; i <= n; ++i) {
        if (!w.empty() && w.back() == i) continue;
        auto v = w;
        v.push_back(i);
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("apply_involution") {
  const GHEquation m = hurwitz_equation(3, 3);
  CHECK(apply_involution(m, T({1, 1, 1}), 1) == T({2, 1, 1}));
  const GHEquation g = GHEquation::make({1, 1, 5}, 5);
  CHECK(apply_involution(g, T({1, 2, 1}), 1) == T({9, 2, 1}));
  CHECK_THROWS_AS(apply_involution(m, T({1, 1, 2}), 0), ValidationError);
  CHECK_THROWS_AS(apply_involution(m, T({1, 1, 2}), 4), ValidationError);
  CHECK_THROWS_AS(apply_involution(m, T({1, 1, 3}), 1), NotASolution);
}

TEST_CASE("neighbors") {
  const GHEquation m = hurwitz_equation(3, 3);
  CHECK(neighbors(m, T({1, 1, 1})) == std::vector<Tuple>{T({2, 1, 1}), T({1, 2, 1}), T({1, 1, 2})});
  CHECK(neighbors(m, T({2, 1, 1})) == std::vector<Tuple>{T({1, 1, 1}), T({2, 5, 1}), T({2, 1, 5})});
}

TEST_CASE("is_fundamental and the sorted form") {
  CHECK(is_fundamental(hurwitz_equation(3, 1), T({3, 3, 3})));
  CHECK_FALSE(is_fundamental(hurwitz_equation(3, 3), T({2, 1, 1})));
  CHECK(is_fundamental(GHEquation::make({1, 2, 3}, 6), T({1, 1, 1})));
  CHECK_THROWS_AS(is_fundamental(hurwitz_equation(3, 3), T({2, 2, 2})), NotASolution);

  Tuple big(92, Int(1));
  big.insert(big.end(), {Int(3), Int(9), Int(13)});
  CHECK(is_fundamental_sorted(hurwitz_equation(95, 1), big));
  CHECK(is_fundamental_sorted(hurwitz_equation(3, 3), T({1, 1, 1})));
  CHECK_FALSE(is_fundamental_sorted(hurwitz_equation(3, 3), T({2, 1, 1})));
  CHECK_THROWS_AS(is_fundamental_sorted(GHEquation::make({1, 2, 3}, 6), T({1, 1, 1})),
                  ValidationError);
}

TEST_CASE("reduce") {
  const GHEquation m = hurwitz_equation(3, 3);
  Reduction r = reduce(m, T({2, 1, 1}));
  CHECK(r.fundamental == T({1, 1, 1}));
  CHECK(r.word == W({1}));

  r = reduce(m, T({1, 2, 5}), true);
  CHECK(r.fundamental == T({1, 1, 1}));
  CHECK(r.word == W({3, 2}));
  REQUIRE(r.trace.size() == 3);
  CHECK(r.trace[1].tuple == T({1, 2, 1}));
  CHECK(r.trace[1].index == 3);
  CHECK(r.trace[2].height == 3);

  r = reduce(m, T({1, 1, 1}));
  CHECK(r.word.empty());
  CHECK_THROWS_AS(reduce(m, T({1, 2, 6})), NotASolution);
}

TEST_CASE("words") {
  const GHEquation m = hurwitz_equation(3, 3);
  CHECK(apply_word(m, T({1, 1, 1}), W({})) == T({1, 1, 1}));
  CHECK(apply_word(m, T({1, 1, 1}), W({2, 3})) == T({1, 2, 5}));
  CHECK_THROWS_AS(W({1, 1}), ValidationError);
  CHECK_THROWS_AS(W({0}), ValidationError);
  const std::vector<std::size_t> raw{1, 2, 2, 3, 3, 1, 2};
  CHECK(normalize_word(raw) == W({2}));
  const std::vector<std::size_t> raw2{1, 2, 3, 3, 2};
  CHECK(normalize_word(raw2) == W({1}));
}

TEST_CASE("involution, closure and descent on random orbit points") {
  std::mt19937 rng(11);
  for (const GHEquation& eq :
       {hurwitz_equation(3, 3), hurwitz_equation(3, 1), GHEquation::make({1, 1, 5}, 5),
        GHEquation::make({1, 2, 3}, 6), GHEquation::make({1, 1, 2}, 4), hurwitz_equation(4, 4),
        hurwitz_equation(5, 1)}) {
    const auto fund = enumerate_fundamental(eq);
    REQUIRE_FALSE(fund.empty());
    std::uniform_int_distribution<std::size_t> pick_idx(1, eq.arity());
    for (int trial = 0; trial < 150; ++trial) {
      Tuple x = fund.solutions[static_cast<std::size_t>(trial) % fund.solutions.size()];
      const std::size_t steps = 1 + static_cast<std::size_t>(trial % 12);
      std::size_t last = 0;
      for (std::size_t s = 0; s < steps; ++s) {
        std::size_t i;
        do i = pick_idx(rng);
        while (i == last);
        x = apply_involution(eq, x, i);
        last = i;
      }
      CHECK(is_solution(eq, x));
      for (std::size_t i = 1; i <= eq.arity(); ++i) {
        CHECK(apply_involution(eq, apply_involution(eq, x, i), i) == x);
      }
      const Reduction r = reduce(eq, x);
      CHECK(is_fundamental(eq, r.fundamental));
      CHECK(std::find(fund.solutions.begin(), fund.solutions.end(), r.fundamental) !=
            fund.solutions.end());
      CHECK(apply_word(eq, r.fundamental, r.word.reversed()) == x);
      // each step lowers the height by at least one
      CHECK(Int(r.word.size()) <= height(x) - Int(static_cast<unsigned long>(eq.arity())));
    }
  }
}

TEST_CASE("strict growth away from the root") {
  // Roots where some psi_i fixes the tuple (equality in the fundamental
  // inequality) are skipped over: the first letter may be a no-op there.
  for (const GHEquation& eq : {hurwitz_equation(3, 3), hurwitz_equation(3, 1),
                               GHEquation::make({1, 1, 5}, 5), GHEquation::make({1, 2, 3}, 6)}) {
    for (const Tuple& f : enumerate_fundamental(eq).solutions) {
      for (const auto& w : words(eq.arity(), 8)) {
        std::vector<Tuple> seen{f};
        Tuple cur = f;
        bool moved = false;
        Int prev = height(f);
        for (std::size_t i : w) {
          cur = apply_involution(eq, cur, i);
          const Int h = height(cur);
          if (moved) CHECK(h > prev);
          if (cur != f) moved = true;
          if (moved) {
            CHECK(std::find(seen.begin() + 1, seen.end(), cur) == seen.end());
            seen.push_back(cur);
          }
          prev = h;
        }
      }
    }
  }
}

TEST_CASE("orbit uniqueness for (1,1,5;5)") {
  const GHEquation eq = GHEquation::make({1, 1, 5}, 5);
  const Tuple a = T({1, 2, 1}), b = T({2, 1, 1});
  for (std::size_t len = 0; len <= 8; ++len) {
    for (const auto& w : words(3, len)) {
      const ReducedWord rw = W(w);
      CHECK(apply_word(eq, a, rw) != b);
      CHECK(reduce(eq, apply_word(eq, a, rw)).fundamental == a);
      CHECK(apply_word(eq, b, rw) != a);
      CHECK(reduce(eq, apply_word(eq, b, rw)).fundamental == b);
    }
  }
}

TEST_CASE("free product: distinct words act distinctly") {
  // Needs a root where every fundamental inequality is strict.
  for (const auto& [eq, root] : {std::pair{hurwitz_equation(3, 1), T({3, 3, 3})},
                                 std::pair{hurwitz_equation(4, 1), T({2, 2, 2, 2})}}) {
    std::map<Tuple, std::vector<std::size_t>> image;
    std::size_t total = 0;
    for (std::size_t len = 0; len <= 6; ++len) {
      for (const auto& w : words(eq.arity(), len)) {
        auto [it, fresh] = image.emplace(apply_word(eq, root, W(w)), w);
        CHECK(fresh);
        ++total;
      }
    }
    CHECK(image.size() == total);
  }
}

TEST_CASE("Hurwitz relators") {
  const GHEquation m = hurwitz_equation(3, 3);
  std::vector<Tuple> samples;
  for (const TreeNode& n : tree_expand(m, T({1, 1, 1}), {Int(100), std::nullopt})) samples.push_back(n.tuple);
  REQUIRE(samples.size() >= 20);
  const RelationReport r3 = verify_hurwitz_relations(m, samples);
  CHECK(r3.entries.size() == 5);
  CHECK(r3.all_hold());
  CHECK_FALSE(r3.vacuous);

  // d = 4 uses the odd-arity table seed; d = 1 whatever the enumerator finds.
  const auto d1 = enumerate_fundamental(hurwitz_equation(5, 1), Canonical::sorted);
  REQUIRE_FALSE(d1.empty());
  for (const auto& [d, seed] : {std::pair{Coeff(4), T({1, 1, 1, 1, 2})}, std::pair{Coeff(1), d1.solutions[0]}}) {
    const GHEquation eq = hurwitz_equation(5, d);
    REQUIRE(is_solution(eq, seed));
    std::vector<Tuple> s5;
    for (const TreeNode& n : tree_expand(eq, seed, {std::nullopt, 3})) s5.push_back(n.tuple);
    REQUIRE(s5.size() >= 20);
    const RelationReport r5 = verify_hurwitz_relations(eq, s5);
    CHECK(r5.entries.size() == 8);
    for (const auto& e : r5.entries) CHECK_MESSAGE(e.holds, e.name);
  }

  const RelationReport empty = verify_hurwitz_relations(m, {});
  CHECK(empty.vacuous);
  CHECK(empty.all_hold());
  CHECK_THROWS_AS(verify_hurwitz_relations(GHEquation::make({1, 1, 5}, 5), {}), ValidationError);
}

TEST_CASE("generators") {
  const GHEquation eq = hurwitz_equation(4, 4);
  const Tuple x = T({1, 2, 3, 4});
  CHECK(apply_generator(eq, x, HurwitzGenerator::phi) == T({2, 1, 3, 4}));
  CHECK(apply_generator(eq, x, HurwitzGenerator::omega) == T({4, 1, 2, 3}));
  CHECK(apply_generator(eq, x, HurwitzGenerator::omega_inv) == T({2, 3, 4, 1}));
}
