#include "hurwitz/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hurwitz/kernels.hpp"
#include "hurwitz/vieta.hpp"

namespace hurwitz {

namespace {

constexpr std::size_t kMaxRawExpansion = 1'000'000;

std::vector<Tuple> run_jobs(const GHEquation& eq, const std::vector<kernels::PrefixJob>& jobs,
                            kernels::Acceptance accept, Execution exec) {
  std::vector<Tuple> found = exec == Execution::parallel
                                 ? kernels::solve_prefixes_omp(eq, jobs, accept)
                                 : kernels::solve_prefixes_serial(eq, jobs, accept);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

// Nondecreasing multisets of values >= lo with product <= budget and at most
// `slots` entries.
void product_multisets(std::size_t slots, Coeff budget, Coeff lo, std::vector<Coeff>& cur,
                       const std::function<void(const std::vector<Coeff>&)>& emit) {
  emit(cur);
  if (slots == 0) return;
  for (Coeff v = lo; v <= budget; ++v) {
    cur.push_back(v);
    product_multisets(slots - 1, budget / v, v, cur, emit);
    cur.pop_back();
  }
}

std::vector<Tuple> sorted_hurwitz(const GHEquation& eq, Execution exec) {
  const std::size_t n = eq.arity();
  std::vector<kernels::PrefixJob> jobs;
  if (eq.d() <= n) {
    const Coeff budget = n / eq.d();
    std::vector<Coeff> cur;
    product_multisets(n - 2, budget, 2, cur, [&](const std::vector<Coeff>& big) {
      kernels::PrefixJob job{n - 2, n - 1, Tuple(n, Int(1))};
      const std::size_t offset = n - 2 - big.size();
      for (std::size_t i = 0; i < big.size(); ++i) job.values[offset + i] = big[i];
      jobs.push_back(std::move(job));
    });
  }
  return run_jobs(eq, jobs, kernels::Acceptance::fundamental_sorted, exec);
}

std::vector<Tuple> expand_permutations(std::vector<Tuple> sorted_reps) {
  std::vector<Tuple> out;
  for (Tuple& t : sorted_reps) {
    // Multinomial guard before materializing anything.
    std::size_t count = 1;
    std::size_t run = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      run = (i > 0 && t[i] == t[i - 1]) ? run + 1 : 1;
      count = count * (i + 1) / run;
      if (count > kMaxRawExpansion) {
        throw DomainError("raw enumeration would exceed " + std::to_string(kMaxRawExpansion) +
                          " tuples; use sorted mode");
      }
    }
    do {
      out.push_back(t);
    } while (std::next_permutation(t.begin(), t.end()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Tuple> enumerate_fundamental_pairs(const GHEquation& eq, Execution exec) {
  if (eq.k() != 0) throw ValidationError("k must be 0; apply eliminate_k first");
  const std::size_t n = eq.arity();
  std::vector<kernels::PrefixJob> jobs;
  if (eq.d() <= eq.coeff_sum()) {
    const Coeff budget = eq.coeff_sum() / eq.d();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        std::vector<std::size_t> fixed;
        for (std::size_t k = 0; k < n; ++k) {
          if (k != i && k != j) fixed.push_back(k);
        }
        Tuple values(n, Int(1));
        std::function<void(std::size_t, Coeff)> assign = [&](std::size_t slot, Coeff left) {
          if (slot == fixed.size()) {
            jobs.push_back({i, j, values});
            return;
          }
          for (Coeff v = 1; v <= left; ++v) {
            values[fixed[slot]] = v;
            assign(slot + 1, left / v);
          }
          values[fixed[slot]] = 1;
        };
        assign(0, budget);
      }
    }
  }
  return run_jobs(eq, jobs, kernels::Acceptance::fundamental, exec);
}

FundamentalSet enumerate_fundamental(const GHEquation& eq, Canonical mode, Execution exec) {
  if (eq.k() != 0) throw ValidationError("k must be 0; apply eliminate_k first");
  if (mode == Canonical::sorted) {
    if (!eq.is_hurwitz()) throw ValidationError("sorted mode needs a Hurwitz equation");
    return {eq, mode, sorted_hurwitz(eq, exec)};
  }
  if (eq.is_hurwitz()) return {eq, mode, expand_permutations(sorted_hurwitz(eq, exec))};
  return {eq, mode, enumerate_fundamental_pairs(eq, exec)};
}

std::vector<FundamentalSet> classify_coefficients(std::size_t n, Execution exec) {
  if (n < 3) throw ValidationError("arity must be at least 3");
  std::vector<std::pair<std::vector<Coeff>, Coeff>> candidates;

  // Some coefficient exceeds n: only the two known families survive.
  {
    std::vector<Coeff> a(n, 1);
    a.back() = n + 2;
    candidates.emplace_back(a, n + 2);
    if (n == 5) {
      a.back() = 6;
      candidates.emplace_back(a, 6);
    }
  }

  // All coefficients <= n: ascending, pairwise coprime, d = g * prod(a) <= sum(a).
  std::vector<Coeff> a;
  std::function<void(Coeff, Coeff, Coeff)> build = [&](Coeff lo, Coeff prod, Coeff sum) {
    if (a.size() == n) {
      for (Coeff d = prod; d <= sum; d += prod) candidates.emplace_back(a, d);
      return;
    }
    const std::size_t left = n - a.size();
    for (Coeff v = lo; v <= n; ++v) {
      // The remaining coefficients are >= v, so sum <= sum + left * n bounds d.
      if (prod * v > sum + v + (left - 1) * n) break;
      bool coprime = true;
      for (Coeff u : a) coprime = coprime && std::gcd(u, v) == 1;
      if (!coprime) continue;
      a.push_back(v);
      build(v, prod * v, sum + v);
      a.pop_back();
    }
  };
  build(1, 1, 0);

  std::vector<std::optional<FundamentalSet>> results(candidates.size());
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(candidates.size());
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto& [coeffs, d] = candidates[static_cast<std::size_t>(i)];
    GHEquation eq = GHEquation::make(coeffs, d, 0);
    FundamentalSet set = enumerate_fundamental(eq, Canonical::raw, Execution::serial);
    if (!set.empty()) results[static_cast<std::size_t>(i)] = std::move(set);
  }

  std::vector<FundamentalSet> out;
  for (auto& r : results) {
    if (r) out.push_back(std::move(*r));
  }
  std::sort(out.begin(), out.end(), [](const FundamentalSet& x, const FundamentalSet& y) {
    const auto xa = x.equation.coeffs();
    const auto ya = y.equation.coeffs();
    if (!std::equal(xa.begin(), xa.end(), ya.begin(), ya.end())) {
      return std::lexicographical_compare(xa.begin(), xa.end(), ya.begin(), ya.end());
    }
    return x.equation.d() < y.equation.d();
  });
  return out;
}

HurwitzSolvability hurwitz_solvable(std::size_t n, Coeff d) {
  if (n < 3 || n > 2 * d) {
    throw ValidationError("closed form covers 3 <= n <= 2d only; use enumerate_fundamental");
  }
  auto with_tail = [n](Coeff second_last, Coeff last) {
    Tuple t(n, Int(1));
    t[n - 2] = second_last;
    t[n - 1] = last;
    return HurwitzSolvability{true, t};
  };
  if (n == d) return with_tail(1, 1);
  if (n == 6 && d == 3) return with_tail(2, 2);
  if (n == 7 && d == 5) return with_tail(1, 2);
  if (n == 10 && d == 6) return with_tail(1, 3);
  if (n == 13 && d == 7) return with_tail(1, 3);
  if (n == 16 && d == 8) return with_tail(1, 3);
  if (n % 2 == 1 && 2 * d == n + 3) return with_tail(1, 2);
  return {false, std::nullopt};
}

MultiplierCount count_A(std::size_t n, Execution exec) {
  if (n < 3) throw ValidationError("arity must be at least 3");
  MultiplierCount out{0, {}};
  // d > n leaves no room: d * (product of n-2 coordinates) <= n.
  for (Coeff d = 1; d <= n; ++d) {
    if (!enumerate_fundamental(hurwitz_equation(n, d), Canonical::sorted, exec).empty()) {
      out.witnesses.push_back(d);
    }
  }
  out.count = out.witnesses.size();
  return out;
}

}  // namespace hurwitz
