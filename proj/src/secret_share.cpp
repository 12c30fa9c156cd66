#include "hurwitz/secret_share.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

namespace hurwitz::share {

namespace {

// Miller-Rabin witness loop for odd n > 2, n - 1 = d * 2^s.
bool passes_base(const Int& n, const Int& d, unsigned s, unsigned base) {
  const Int n1 = n - 1;
  Int x;
  const Int b = base;
  mpz_powm(x.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n1) return true;
  }
  return false;
}

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i + 1;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool is_prime(const Int& p) {
  if (p < 2) return false;
  static const Int two64 = Int(1) << 64;
  if (p >= two64) return mpz_probab_prime_p(p.get_mpz_t(), 65) > 0;
  static constexpr unsigned kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (unsigned b : kBases) {
    if (p == b) return true;
    if (mpz_divisible_ui_p(p.get_mpz_t(), b)) return false;
  }
  Int d = p - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  for (unsigned b : kBases) {
    if (!passes_base(p, d, s, b)) return false;
  }
  return true;
}

std::optional<std::size_t> binomial(std::size_t n, std::size_t k, std::size_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * Int(static_cast<unsigned long>(n - k + i)) / static_cast<unsigned long>(i);
  }
  if (r > static_cast<unsigned long>(cap)) return std::nullopt;
  return static_cast<std::size_t>(r.get_ui());
}

std::vector<std::vector<std::size_t>> lex_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  for_each_subset(n, k, [&](const std::vector<std::size_t>& s) { out.push_back(s); });
  return out;
}

Int secret_of(std::span<const Int> x, const Int& p) {
  Int squares = 0;
  Int prod = 1;
  for (const Int& v : x) {
    squares = (squares + v * v) % p;
    prod = prod * v % p;
  }
  Int s = (squares - prod) % p;
  if (sgn(s) < 0) s += p;
  return s;
}

Dealt deal(std::size_t n, std::size_t t, const Int& p, std::optional<std::vector<Int>> x,
           std::optional<std::uint64_t> seed) {
  if (t < 2 || t > n) throw ValidationError("need 2 <= t <= n");
  if (!is_prime(p)) throw ValidationError("modulus " + p.get_str() + " is not prime");
  const auto m = binomial(n, t - 1);
  if (!m) {
    throw ValidationError("C(" + std::to_string(n) + ", " + std::to_string(t - 1) +
                          ") exceeds the limit of " + std::to_string(kMaxElements) + " elements");
  }

  Dealt out;
  Scheme& s = out.scheme;
  s.header = {n, t, p};
  s.m = *m;
  if (x) {
    if (x->size() != s.m) {
      throw ValidationError("secret tuple has " + std::to_string(x->size()) + " entries, expected " +
                            std::to_string(s.m));
    }
    for (std::size_t j = 0; j < x->size(); ++j) {
      Int r = (*x)[j] % p;
      if (sgn(r) < 0) r += p;
      if (r == 0) throw ValidationError("entry " + std::to_string(j + 1) + " is zero mod p");
      s.x.push_back(r);
    }
  } else {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(static_cast<unsigned long>(seed ? *seed : std::random_device{}()));
    const Int range = p - 1;
    for (std::size_t j = 0; j < s.m; ++j) s.x.push_back(rng.get_z_range(range) + 1);
  }
  s.secret = secret_of(s.x, p);
  s.subsets = lex_subsets(n, t - 1);

  out.shares.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.shares[i] = {s.header, i + 1, {}};
  for (std::size_t j = 0; j < s.m; ++j) {
    const auto& a = s.subsets[j];
    for (std::size_t i = 1; i <= n; ++i) {
      if (!std::binary_search(a.begin(), a.end(), i)) out.shares[i - 1].entries.emplace_back(j + 1, s.x[j]);
    }
  }
  return out;
}

Combined combine(std::span<const Share> shares) {
  if (shares.empty()) throw ValidationError("no shares given");
  const Header& h = shares.front().header;
  const auto m = binomial(h.n, h.t - 1);
  if (h.t < 2 || h.t > h.n || !m) throw ValidationError("share header is out of range");

  std::map<std::size_t, Int> known;
  for (const Share& s : shares) {
    if (!(s.header == h)) {
      throw ValidationError("share of participant " + std::to_string(s.participant) +
                            " has a different header");
    }
    for (const auto& [j, v] : s.entries) {
      if (j == 0 || j > *m) throw ValidationError("entry index " + std::to_string(j) + " out of range");
      auto [it, fresh] = known.emplace(j, v);
      if (!fresh && it->second != v) {
        throw ValidationError("shares disagree on x_" + std::to_string(j));
      }
    }
  }

  Combined out;
  for (std::size_t j = 1; j <= *m; ++j) {
    if (!known.count(j)) out.missing.push_back(j);
  }
  if (out.missing.empty()) {
    std::vector<Int> x;
    x.reserve(*m);
    for (auto& [j, v] : known) x.push_back(v);
    out.secret = secret_of(x, h.p);
  }
  return out;
}

ThresholdReport verify_threshold(const Scheme& scheme, std::span<const Share> shares) {
  const std::size_t n = scheme.header.n;
  const std::size_t t = scheme.header.t;
  if (n > 12) throw ValidationError("exhaustive threshold check is limited to n <= 12");
  if (shares.size() != n) throw ValidationError("expected one share per participant");

  ThresholdReport rep;
  auto run = [&](std::size_t k, bool should_cover) {
    for_each_subset(n, k, [&](const std::vector<std::size_t>& who) {
      std::vector<Share> pick;
      for (std::size_t i : who) pick.push_back(shares[i - 1]);
      const Combined c = combine(pick);
      const bool ok = should_cover ? c.secret && *c.secret == scheme.secret : !c.secret;
      (should_cover ? rep.covering_checked : rep.blocked_checked)++;
      if (!ok) {
        rep.passed = false;
        rep.counterexamples.push_back(who);
      }
    });
  };
  run(t, true);
  if (t >= 2) run(t - 1, false);
  return rep;
}

}  // namespace hurwitz::share
