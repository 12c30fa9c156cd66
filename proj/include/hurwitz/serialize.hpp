#pragma once

// JSON encodings shared by the CLI and the fixtures. Big integers are always
// written as decimal strings; on input both strings and JSON integers are
// accepted.

#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "hurwitz/baragar_umeda.hpp"
#include "hurwitz/core.hpp"
#include "hurwitz/enumerate.hpp"
#include "hurwitz/secret_share.hpp"
#include "hurwitz/vieta.hpp"

namespace hurwitz::io {

using json = nlohmann::ordered_json;

/// Malformed input (bad JSON, missing fields, wrong types). Deliberately not a
/// DomainError: the CLI maps it to the usage exit code.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Equation = std::variant<GHEquation, BUEquation>;

json to_json(const GHEquation& eq);
json to_json(const BUEquation& eq);
json tuple_json(std::span<const Int> x);
json tuple_json(const Triple& t);

/// Parses {"kind":"gh",...} or {"kind":"bu",...}; validation failures throw
/// ValidationError, shape problems FormatError.
Equation parse_equation(const json& j);
Equation parse_equation(const std::string& text);

/// Accepts {"x":[...]} or a bare array.
Tuple parse_tuple(const json& j);
Tuple parse_tuple(const std::string& text);

Int parse_int(const json& j);
Coeff parse_coeff(const json& j);

json to_json(const share::Share& s);
share::Share parse_share(const json& j);

json to_json(const TreeNode& node);
json to_json(const TraceStep& step);

}  // namespace hurwitz::io
