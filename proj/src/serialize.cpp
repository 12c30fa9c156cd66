#include "hurwitz/serialize.hpp"

#include <cctype>

#include "hurwitz/vieta.hpp"

namespace hurwitz::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing field \"") + key + "\"");
  return *it;
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Int parse_int(const json& j) {
  if (j.is_number_unsigned()) return Int(static_cast<unsigned long>(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() == start) throw FormatError("empty integer string");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw FormatError("not an integer: \"" + s + "\"");
    }
    return Int(s, 10);
  }
  throw FormatError("expected an integer (number or decimal string)");
}

Coeff parse_coeff(const json& j) {
  const Int v = parse_int(j);
  if (sgn(v) < 0 || !v.fits_ulong_p()) throw ValidationError("coefficient out of range: " + v.get_str());
  return v.get_ui();
}

json to_json(const GHEquation& eq) {
  json a = json::array();
  for (Coeff c : eq.coeffs()) a.push_back(c);
  return {{"kind", "gh"}, {"n", eq.arity()}, {"a", a}, {"d", eq.d()}, {"k", eq.k()}};
}

json to_json(const BUEquation& eq) {
  return {{"kind", "bu"}, {"a", eq.a()}, {"b", eq.b()}, {"c", eq.c()}, {"d", eq.d()}, {"e", eq.e()}};
}

json tuple_json(std::span<const Int> x) {
  json arr = json::array();
  for (const Int& v : x) arr.push_back(v.get_str());
  return arr;
}

json tuple_json(const Triple& t) { return tuple_json(std::span<const Int>(t.data(), t.size())); }

Equation parse_equation(const json& j) {
  const json& kind = field(j, "kind");
  if (!kind.is_string()) throw FormatError("\"kind\" must be a string");
  if (kind == "gh") {
    const json& a = field(j, "a");
    if (!a.is_array()) throw FormatError("\"a\" must be an array");
    std::vector<Coeff> coeffs;
    for (const json& v : a) coeffs.push_back(parse_coeff(v));
    if (j.contains("n") && parse_coeff(j["n"]) != coeffs.size()) {
      throw ValidationError("\"n\" does not match the length of \"a\"");
    }
    const Coeff k = j.contains("k") ? parse_coeff(j["k"]) : 0;
    return GHEquation::make(std::move(coeffs), parse_coeff(field(j, "d")), k);
  }
  if (kind == "bu") {
    return BUEquation::make(parse_coeff(field(j, "a")), parse_coeff(field(j, "b")),
                            parse_coeff(field(j, "c")), parse_coeff(field(j, "d")),
                            parse_coeff(field(j, "e")));
  }
  throw FormatError("unknown equation kind \"" + kind.get<std::string>() + "\"");
}

Equation parse_equation(const std::string& text) { return parse_equation(parse_text(text)); }

Tuple parse_tuple(const json& j) {
  const json& arr = j.is_object() ? field(j, "x") : j;
  if (!arr.is_array()) throw FormatError("tuple must be an array or {\"x\": [...]}");
  Tuple out;
  for (const json& v : arr) out.push_back(parse_int(v));
  return out;
}

Tuple parse_tuple(const std::string& text) { return parse_tuple(parse_text(text)); }

json to_json(const share::Share& s) {
  json entries = json::array();
  for (const auto& [j, v] : s.entries) entries.push_back(json::array({j, v.get_str()}));
  return {{"n", s.header.n}, {"t", s.header.t}, {"p", s.header.p.get_str()},
          {"i", s.participant}, {"entries", entries}};
}

share::Share parse_share(const json& j) {
  share::Share s;
  s.header.n = parse_coeff(field(j, "n"));
  s.header.t = parse_coeff(field(j, "t"));
  s.header.p = parse_int(field(j, "p"));
  s.participant = parse_coeff(field(j, "i"));
  const json& entries = field(j, "entries");
  if (!entries.is_array()) throw FormatError("\"entries\" must be an array");
  for (const json& e : entries) {
    if (!e.is_array() || e.size() != 2) throw FormatError("share entry must be [index, value]");
    s.entries.emplace_back(parse_coeff(e[0]), parse_int(e[1]));
  }
  return s;
}

json to_json(const TreeNode& node) {
  json out = {{"id", 0}, {"x", tuple_json(node.tuple)}, {"height", node.height.get_str()},
              {"depth", node.depth}};
  if (node.parent) {
    out["parent"] = *node.parent;
    out["edge"] = node.edge;
  } else {
    out["parent"] = nullptr;
    out["edge"] = nullptr;
  }
  return out;
}

json to_json(const TraceStep& step) {
  return {{"step", step.step}, {"index", step.index}, {"tuple", tuple_json(step.tuple)},
          {"height", step.height.get_str()}};
}

}  // namespace hurwitz::io
