#include <doctest.h>

#include <numeric>
#include <set>

#include "hurwitz/baragar_umeda.hpp"
#include "hurwitz/kernels.hpp"
#include "oracles.hpp"

using namespace hurwitz;

namespace {

Triple T(long x, long y, long z) { return {Int(x), Int(y), Int(z)}; }

std::vector<Triple> from_small(const std::vector<std::array<oracle::i64, 3>>& v) {
  std::vector<Triple> out;
  for (const auto& t : v) out.push_back(T(t[0], t[1], t[2]));
  return out;
}

}  // namespace

TEST_CASE("bu::is_fundamental") {
  CHECK(bu::is_fundamental(BUEquation::make(1, 5, 5, 5, 1), T(4, 1, 2)));
  CHECK(bu::is_fundamental(BUEquation::make(3, 4, 6, 12, 1), T(1, 1, 1)));
  CHECK_FALSE(bu::is_fundamental(BUEquation::make(1, 3, 3, 3, 4), T(2, 1, 1)));
  CHECK_THROWS_AS(bu::is_fundamental(BUEquation::make(1, 5, 5, 5, 1), T(4, 1, 1)), NotASolution);
}

TEST_CASE("bu::apply_involution") {
  const BUEquation eq = BUEquation::make(1, 5, 5, 5, 1);
  CHECK(bu::apply_involution(eq, T(4, 1, 2), bu::Axis::x) == T(6, 1, 2));
  for (bu::Axis ax : {bu::Axis::x, bu::Axis::y, bu::Axis::z}) {
    const Triple once = bu::apply_involution(eq, T(4, 1, 2), ax);
    CHECK(bu::apply_involution(eq, once, ax) == T(4, 1, 2));
  }
  for (Coeff d = 1; d <= 10; ++d) {
    const BUEquation e4 = BUEquation::make(1, d, d, d, 4);
    for (long n = 1; n <= 10; ++n) {
      const Int expect = Int(d) * n * n - 2;
      if (expect > 0) {
        CHECK(bu::apply_involution(e4, T(2, n, n), bu::Axis::x) == Triple{expect, Int(n), Int(n)});
      } else {
        CHECK_THROWS_AS(bu::apply_involution(e4, T(2, n, n), bu::Axis::x), DomainError);
      }
    }
  }
}

TEST_CASE("bu::enumerate_fundamental") {
  CHECK(bu::enumerate_fundamental(BUEquation::make(1, 2, 2, 2, 1)).solutions == std::vector<Triple>{T(3, 2, 2)});
  CHECK(bu::enumerate_fundamental(BUEquation::make(2, 3, 6, 6, 2)).solutions == std::vector<Triple>{T(2, 2, 1)});
  CHECK(bu::enumerate_fundamental(BUEquation::make(1, 5, 5, 5, 1)).solutions ==
        std::vector<Triple>{T(4, 1, 2), T(4, 2, 1)});

  const bu::Search e4 = bu::enumerate_fundamental(BUEquation::make(1, 4, 4, 4, 4), Int(40));
  CHECK(e4.unbounded);
  REQUIRE(e4.family.has_value());
  CHECK(e4.family->d == 4);
  for (long n = 1; 2 + 2 * n <= 40; ++n) {
    CHECK(std::find(e4.solutions.begin(), e4.solutions.end(), T(2, n, n)) != e4.solutions.end());
  }
  for (const Triple& t : e4.solutions) {
    CHECK(bu::is_fundamental(e4.equation, t));
    CHECK(t[0] + t[1] + t[2] <= 40);
  }
  CHECK_THROWS_AS(bu::enumerate_fundamental(BUEquation::make(1, 4, 4, 4, 4), Int(2)), ValidationError);
}

TEST_CASE("e = 0 goes through the ternary search") {
  CHECK(bu::enumerate_fundamental(BUEquation::make(1, 1, 5, 5, 0)).solutions ==
        std::vector<Triple>{T(1, 2, 1), T(2, 1, 1)});
  // Not pairwise coprime: direct search, checked against the box.
  for (const auto& [a, b, c, d] : std::vector<std::array<Coeff, 4>>{
           {2, 2, 1, 2}, {2, 2, 1, 4}, {1, 2, 2, 2}, {2, 3, 3, 6}, {2, 2, 3, 6}, {3, 3, 1, 3}, {1, 4, 4, 4}}) {
    const BUEquation eq = BUEquation::make(a, b, c, d, 0);
    const auto got = bu::enumerate_fundamental(eq).solutions;
    const auto box = from_small(oracle::bu_box(static_cast<oracle::i64>(a), static_cast<oracle::i64>(b),
                                               static_cast<oracle::i64>(c), static_cast<oracle::i64>(d), 0, 30));
    std::vector<Triple> got_in_box;
    for (const Triple& t : got) {
      if (t[0] <= 30 && t[1] <= 30 && t[2] <= 30) got_in_box.push_back(t);
    }
    CHECK_MESSAGE(got_in_box == box, eq.to_string());
  }
}

TEST_CASE("E4 family identity") {
  for (Coeff d = 1; d <= 50; ++d) {
    const bu::E4Family fam{d};
    const BUEquation eq = fam.equation();
    CHECK(bu::E4Family::match(eq).has_value());
    for (long n = 1; n <= 50; ++n) {
      const Triple t = fam.member(Int(n));
      CHECK(eval_residual(eq, t) == 0);
      CHECK(bu::is_fundamental(eq, t) == fam.member_is_fundamental(Int(n)));
      CHECK(fam.member_is_fundamental(Int(n)) == (d * n * n >= 4));
    }
  }
  CHECK_FALSE(bu::E4Family::match(BUEquation::make(1, 4, 4, 4, 3)).has_value());
}

TEST_CASE("classify returns nothing for e >= 5") {
  CHECK(bu::classify(5).empty());
  CHECK(bu::classify(7).empty());
  CHECK_THROWS_AS(bu::classify(0), ValidationError);
}

TEST_CASE("every classified triple re-verifies") {
  for (Coeff e = 1; e <= 4; ++e) {
    for (const bu::Search& s : bu::classify(e)) {
      CHECK((s.unbounded || !s.solutions.empty()));
      for (const Triple& t : s.solutions) CHECK(bu::is_fundamental(s.equation, t));
    }
  }
}

TEST_CASE("serial and parallel classification agree") {
  for (Coeff e = 1; e <= 4; ++e) {
    const auto a = bu::classify(e, {}, Execution::serial);
    const auto b = bu::classify(e, {}, Execution::parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].equation == b[i].equation);
      CHECK(a[i].solutions == b[i].solutions);
    }
  }
}

TEST_CASE("brute-force membership agrees with classify") {
  // a <= b <= c <= 16, d <= 32, e <= 6, box 24.
  std::vector<BUEquation> eqs;
  for (Coeff a = 1; a <= 16; ++a) {
    for (Coeff b = a; b <= 16; ++b) {
      for (Coeff c = b; c <= 16; ++c) {
        if (std::gcd(std::gcd(a, b), c) != 1) continue;
        const Coeff l = std::lcm(std::lcm(a, b), c);
        for (Coeff d = l; d <= 32; d += l) {
          for (Coeff e = 1; e <= 6; ++e) eqs.push_back(BUEquation::make(a, b, c, d, e));
        }
      }
    }
  }
  const auto scans = kernels::bu_box_scan_omp(eqs, 24);
  std::set<BUEquation> classified;
  for (Coeff e = 1; e <= 6; ++e) {
    for (const bu::Search& s : bu::classify(e)) classified.insert(s.equation);
  }
  std::size_t nonempty = 0;
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    const bool box = !scans[i].empty();
    nonempty += box;
    if (box) CHECK_MESSAGE(classified.count(eqs[i]) == 1, eqs[i].to_string());
    // classify may see solutions outside the box, so only one direction is
    // forced; inside the box the explicit lists must agree
    if (classified.count(eqs[i])) {
      const auto s = bu::enumerate_fundamental(eqs[i], Int(72));
      std::vector<Triple> in_box;
      for (const Triple& t : s.solutions) {
        if (t[0] <= 24 && t[1] <= 24 && t[2] <= 24) in_box.push_back(t);
      }
      std::vector<Triple> want;
      for (const auto& t : scans[i]) want.push_back(T(t[0], t[1], t[2]));
      CHECK_MESSAGE(in_box == want, eqs[i].to_string());
    }
    if (eqs[i].e() >= 5) CHECK(scans[i].empty());
  }
  CHECK(nonempty > 0);
}

TEST_CASE("canonical_order") {
  bu::Search s{BUEquation::make(5, 1, 5, 5, 1), {T(1, 4, 2), T(2, 4, 1)}, false, std::nullopt, Int(60)};
  const bu::Search c = bu::canonical_order(s);
  CHECK(c.equation == BUEquation::make(1, 5, 5, 5, 1));
  CHECK(c.solutions == std::vector<Triple>{T(4, 1, 2), T(4, 2, 1)});
}
