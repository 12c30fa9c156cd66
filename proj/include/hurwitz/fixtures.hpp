#pragma once

// Reference tables compiled into the library (sources under data/).

#include <string>
#include <vector>

#include "hurwitz/core.hpp"

namespace hurwitz::fixtures {

/// Ternary equations a x^2 + b y^2 + c z^2 = d x y z with solutions.
struct TernaryRow {
  std::vector<Coeff> a;
  Coeff d;
  std::vector<Tuple> fundamental;
};

/// Hurwitz arity/multiplier pairs with a single orbit, n <= 16.
struct TransitiveRow {
  std::string rule;
  std::size_t n;
  Coeff d;
  Tuple fundamental;  ///< ascending
};

struct BURow {
  BUEquation equation;
  std::vector<Triple> fundamental;  ///< lexicographic
};

const std::vector<TernaryRow>& ternary_table();
const std::vector<TransitiveRow>& transitive_table();
const std::vector<BURow>& bu_table();

}  // namespace hurwitz::fixtures
