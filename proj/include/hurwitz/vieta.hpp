#pragma once

// The Vieta involutions
//
//   psi_i : x_i -> (d / a_i) * prod_{j != i} x_j - x_i
//
// and the descent they induce on solutions. Involution indices are 1-based
// everywhere in this header, matching how reduction words are printed.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hurwitz/core.hpp"

namespace hurwitz {

/// An alternating word psi_{i_1} ... psi_{i_m} stored in application order
/// (i_1 is applied first). Adjacent indices are always distinct.
class ReducedWord {
 public:
  ReducedWord() = default;

  /// Rejects words with equal adjacent indices or index 0.
  static ReducedWord from_indices(std::vector<std::size_t> indices);

  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  ReducedWord reversed() const;

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;

 private:
  explicit ReducedWord(std::vector<std::size_t> indices) : indices_(std::move(indices)) {}
  std::vector<std::size_t> indices_;
};

/// Cancels adjacent psi_i psi_i pairs until the word alternates.
ReducedWord normalize_word(std::span<const std::size_t> indices);

Tuple apply_involution(const GHEquation& eq, std::span<const Int> x, std::size_t index);

/// [psi_1(x), ..., psi_n(x)]
std::vector<Tuple> neighbors(const GHEquation& eq, std::span<const Int> x);

/// 2 a_i x_i <= d prod_{j != i} x_j for every i.
bool is_fundamental(const GHEquation& eq, std::span<const Int> x);

/// Sorted form used for Hurwitz equations:
/// 1 <= y_1 <= ... <= y_n <= (d/2) y_1 ... y_{n-1}.
bool is_fundamental_sorted(const GHEquation& eq, std::span<const Int> x);

struct TraceStep {
  std::size_t step;
  std::size_t index;
  Tuple tuple;
  Int height;
};

struct Reduction {
  Tuple fundamental;
  ReducedWord word;
  std::vector<TraceStep> trace;
};

/// Height descent: while some psi_i strictly lowers the height, apply the one
/// with the smallest index. apply_word(fundamental, word.reversed()) == x.
Reduction reduce(const GHEquation& eq, std::span<const Int> x, bool record_trace = false);

/// Applies the word left to right.
Tuple apply_word(const GHEquation& eq, std::span<const Int> x, const ReducedWord& w);

// Symmetric-group machinery, Hurwitz equations only.

enum class HurwitzGenerator { phi, omega, omega_inv, psi };

/// phi swaps x_1 and x_2, omega rotates (x_1..x_n) -> (x_n, x_1..x_{n-1}),
/// psi is the first Vieta involution.
Tuple apply_generator(const GHEquation& eq, std::span<const Int> x, HurwitzGenerator g);

struct Relator {
  std::string name;
  std::vector<HurwitzGenerator> word;  ///< written left to right, evaluated as a composition
};

/// The defining relators of the group generated by phi, omega, psi
/// (one list for n = 3, another for n >= 4).
std::vector<Relator> hurwitz_relators(std::size_t n);

/// Evaluates g_1 g_2 ... g_m as a composition of maps: g_m acts first.
Tuple apply_relator(const GHEquation& eq, std::span<const Int> x, const Relator& r);

struct RelationReport {
  struct Entry {
    std::string name;
    bool holds;
    std::size_t failures;
  };
  std::vector<Entry> entries;
  std::size_t samples = 0;
  bool vacuous = false;

  bool all_hold() const;
};

RelationReport verify_hurwitz_relations(const GHEquation& eq, std::span<const Tuple> samples);

}  // namespace hurwitz
