#include "hurwitz/vieta.hpp"

#include <algorithm>

namespace hurwitz {

ReducedWord ReducedWord::from_indices(std::vector<std::size_t> indices) {
  for (std::size_t t = 0; t < indices.size(); ++t) {
    if (indices[t] == 0) throw ValidationError("involution indices are 1-based");
    if (t + 1 < indices.size() && indices[t] == indices[t + 1]) {
      throw ValidationError("word is not alternating at position " + std::to_string(t + 1) +
                            "; cancel psi_i psi_i pairs with normalize_word");
    }
  }
  return ReducedWord(std::move(indices));
}

ReducedWord ReducedWord::reversed() const {
  return ReducedWord(std::vector<std::size_t>(indices_.rbegin(), indices_.rend()));
}

ReducedWord normalize_word(std::span<const std::size_t> indices) {
  std::vector<std::size_t> stack;
  for (std::size_t i : indices) {
    if (i == 0) throw ValidationError("involution indices are 1-based");
    if (!stack.empty() && stack.back() == i) {
      stack.pop_back();
    } else {
      stack.push_back(i);
    }
  }
  return ReducedWord::from_indices(std::move(stack));
}

namespace {

// prod_{j != i} x_j for 0-based i.
Int product_except(std::span<const Int> x, std::size_t i) {
  Int p = 1;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j != i) p *= x[j];
  }
  return p;
}

void check_index(const GHEquation& eq, std::size_t index) {
  if (index == 0 || index > eq.arity()) {
    throw ValidationError("involution index " + std::to_string(index) + " out of range 1.." +
                          std::to_string(eq.arity()));
  }
}

// Other root of the quadratic in coordinate i (0-based); no checks.
Int flipped(const GHEquation& eq, std::span<const Int> x, std::size_t i) {
  return Int(eq.d() / eq.coeff(i)) * product_except(x, i) - x[i];
}

}  // namespace

Tuple apply_involution(const GHEquation& eq, std::span<const Int> x, std::size_t index) {
  check_index(eq, index);
  require_solution(eq, x);
  Tuple out(x.begin(), x.end());
  out[index - 1] = flipped(eq, x, index - 1);
  if (sgn(out[index - 1]) <= 0) {
    throw DomainError("psi_" + std::to_string(index) + " produced a non-positive coordinate");
  }
  require_solution(eq, out);
  return out;
}

std::vector<Tuple> neighbors(const GHEquation& eq, std::span<const Int> x) {
  std::vector<Tuple> out;
  out.reserve(eq.arity());
  for (std::size_t i = 1; i <= eq.arity(); ++i) out.push_back(apply_involution(eq, x, i));
  return out;
}

bool is_fundamental(const GHEquation& eq, std::span<const Int> x) {
  require_solution(eq, x);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (2 * eq.coeff(i) * x[i] > eq.d() * product_except(x, i)) return false;
  }
  return true;
}

bool is_fundamental_sorted(const GHEquation& eq, std::span<const Int> x) {
  if (!eq.is_hurwitz()) throw ValidationError("sorted fundamental form needs a Hurwitz equation");
  require_solution(eq, x);
  if (!std::is_sorted(x.begin(), x.end())) return false;
  return 2 * x.back() <= eq.d() * product_except(x, x.size() - 1);
}

Reduction reduce(const GHEquation& eq, std::span<const Int> x, bool record_trace) {
  require_solution(eq, x);
  Reduction out;
  out.fundamental.assign(x.begin(), x.end());
  Tuple& cur = out.fundamental;
  std::vector<std::size_t> word;
  Int prod = 1;
  for (const Int& v : cur) prod *= v;
  Int h = height(cur);
  if (record_trace) out.trace.push_back({0, 0, cur, h});

  for (;;) {
    std::size_t chosen = cur.size();
    for (std::size_t i = 0; i < cur.size(); ++i) {
      // psi_i lowers the height iff 2 a_i x_i > d prod_{j != i} x_j.
      Int others;
      mpz_divexact(others.get_mpz_t(), prod.get_mpz_t(), cur[i].get_mpz_t());
      if (2 * eq.coeff(i) * cur[i] > eq.d() * others) {
        chosen = i;
        break;
      }
    }
    if (chosen == cur.size()) break;
    Int others;
    mpz_divexact(others.get_mpz_t(), prod.get_mpz_t(), cur[chosen].get_mpz_t());
    Int next = Int(eq.d() / eq.coeff(chosen)) * others - cur[chosen];
    if (sgn(next) <= 0) throw DomainError("descent left the positive orthant");
    h += next - cur[chosen];
    prod = others * next;
    cur[chosen] = std::move(next);
    word.push_back(chosen + 1);
    if (record_trace) out.trace.push_back({word.size(), chosen + 1, cur, h});
  }
  out.word = ReducedWord::from_indices(std::move(word));
  return out;
}

Tuple apply_word(const GHEquation& eq, std::span<const Int> x, const ReducedWord& w) {
  require_solution(eq, x);
  Tuple cur(x.begin(), x.end());
  for (std::size_t index : w.indices()) {
    check_index(eq, index);
    cur[index - 1] = flipped(eq, cur, index - 1);
    if (sgn(cur[index - 1]) <= 0) throw DomainError("word left the positive orthant");
  }
  require_solution(eq, cur);
  return cur;
}

Tuple apply_generator(const GHEquation& eq, std::span<const Int> x, HurwitzGenerator g) {
  if (!eq.is_hurwitz()) throw ValidationError("phi/omega/psi need a Hurwitz equation");
  Tuple out(x.begin(), x.end());
  switch (g) {
    case HurwitzGenerator::phi:
      std::swap(out[0], out[1]);
      break;
    case HurwitzGenerator::omega:
      std::rotate(out.rbegin(), out.rbegin() + 1, out.rend());
      break;
    case HurwitzGenerator::omega_inv:
      std::rotate(out.begin(), out.begin() + 1, out.end());
      break;
    case HurwitzGenerator::psi:
      out[0] = flipped(eq, x, 0);
      break;
  }
  return out;
}

std::vector<Relator> hurwitz_relators(std::size_t n) {
  using G = HurwitzGenerator;
  constexpr G f = G::phi, w = G::omega, W = G::omega_inv, p = G::psi;
  auto power = [](std::vector<G> base, std::size_t k) {
    std::vector<G> out;
    for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), base.begin(), base.end());
    return out;
  };
  if (n < 3) throw ValidationError("relators need n >= 3");
  if (n == 3) {
    return {
        {"phi^2", {f, f}},
        {"omega^3", {w, w, w}},
        {"(phi omega)^2", power({f, w}, 2)},
        {"psi^2", {p, p}},
        {"(psi phi omega)^2", power({p, f, w}, 2)},
    };
  }
  return {
      {"phi^2", {f, f}},
      {"omega^n", std::vector<G>(n, w)},
      {"(phi omega)^(n-1)", power({f, w}, n - 1)},
      {"(phi omega^2 phi omega^-2)^2", power({f, w, w, f, W, W}, 2)},
      {"(phi omega phi omega^-1)^3", power({f, w, f, W}, 3)},
      {"psi^2", {p, p}},
      {"(psi omega phi omega^-1)^2", power({p, w, f, W}, 2)},
      {"psi phi omega psi omega^-1 phi", {p, f, w, p, W, f}},
  };
}

Tuple apply_relator(const GHEquation& eq, std::span<const Int> x, const Relator& r) {
  Tuple cur(x.begin(), x.end());
  for (auto it = r.word.rbegin(); it != r.word.rend(); ++it) cur = apply_generator(eq, cur, *it);
  return cur;
}

bool RelationReport::all_hold() const {
  return std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.holds; });
}

RelationReport verify_hurwitz_relations(const GHEquation& eq, std::span<const Tuple> samples) {
  if (!eq.is_hurwitz()) throw ValidationError("relator check needs a Hurwitz equation");
  for (const Tuple& x : samples) require_solution(eq, x);
  RelationReport report;
  report.samples = samples.size();
  report.vacuous = samples.empty();
  for (const Relator& r : hurwitz_relators(eq.arity())) {
    std::size_t failures = 0;
    for (const Tuple& x : samples) {
      if (apply_relator(eq, x, r) != x) ++failures;
    }
    report.entries.push_back({r.name, failures == 0, failures});
  }
  return report;
}

}  // namespace hurwitz
