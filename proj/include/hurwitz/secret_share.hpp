#pragma once

// (n, t) threshold sharing over F_p with the secret
//
//   S = x_1^2 + ... + x_m^2 - x_1 ... x_m   (mod p),  m = C(n, t-1).
//
// A_1, ..., A_m are the (t-1)-subsets of {1..n} in lexicographic order and
// participant i receives R_i = { (j, x_j) : i not in A_j }. Any t participants
// together miss no index; any t-1 of them miss the index of their own set.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hurwitz/core.hpp"

namespace hurwitz::share {

inline constexpr std::size_t kMaxElements = 1'000'000;

struct Header {
  std::size_t n;
  std::size_t t;
  Int p;

  friend bool operator==(const Header&, const Header&) = default;
};

struct Share {
  Header header;
  std::size_t participant;                          ///< 1-based
  std::vector<std::pair<std::size_t, Int>> entries;  ///< (j, x_j), j ascending
};

struct Scheme {
  Header header;
  std::size_t m;
  std::vector<Int> x;                              ///< x_1..x_m
  Int secret;
  std::vector<std::vector<std::size_t>> subsets;  ///< A_1..A_m, 1-based members
};

struct Dealt {
  Scheme scheme;
  std::vector<Share> shares;  ///< R_1..R_n
};

/// Deterministic for p < 2^64; 65 Miller-Rabin rounds above.
bool is_prime(const Int& p);

/// C(n, k), or nothing when it exceeds `cap`.
std::optional<std::size_t> binomial(std::size_t n, std::size_t k, std::size_t cap = kMaxElements);

/// Lexicographic k-subsets of {1..n}.
std::vector<std::vector<std::size_t>> lex_subsets(std::size_t n, std::size_t k);

Int secret_of(std::span<const Int> x, const Int& p);

/// Without `x`, draws uniform nonzero elements from a generator seeded with
/// `seed` (or a random seed when absent).
Dealt deal(std::size_t n, std::size_t t, const Int& p, std::optional<std::vector<Int>> x = {},
           std::optional<std::uint64_t> seed = {});

struct Combined {
  std::optional<Int> secret;
  std::vector<std::size_t> missing;  ///< ascending, empty on success
};

/// Throws ValidationError on an empty set, mismatched headers or two shares
/// disagreeing on some x_j.
Combined combine(std::span<const Share> shares);

struct ThresholdReport {
  bool passed = true;
  std::size_t covering_checked = 0;
  std::size_t blocked_checked = 0;
  /// participant sets (1-based) that behaved wrongly
  std::vector<std::vector<std::size_t>> counterexamples;
};

/// Every t-subset must reconstruct the dealt secret; every (t-1)-subset must
/// fail. Exhaustive, so n is capped at 12.
ThresholdReport verify_threshold(const Scheme& scheme, std::span<const Share> shares);

}  // namespace hurwitz::share
