#include "hurwitz/fixtures.hpp"

#include <algorithm>
#include <sstream>

#include "hurwitz/serialize.hpp"

namespace hurwitz::fixtures {

namespace detail {
extern const char* const kTernary;
extern const char* const kHurwitzTransitive;
extern const char* const kBaragarUmeda;
}  // namespace detail

namespace {

template <class F>
void each_line(const char* text, F&& fn) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    fn(io::json::parse(line));
  }
}

}  // namespace

const std::vector<TernaryRow>& ternary_table() {
  static const std::vector<TernaryRow> rows = [] {
    std::vector<TernaryRow> out;
    each_line(detail::kTernary, [&](const io::json& j) {
      TernaryRow r;
      for (const auto& v : j.at("a")) r.a.push_back(io::parse_coeff(v));
      r.d = io::parse_coeff(j.at("d"));
      for (const auto& t : j.at("fundamental")) r.fundamental.push_back(io::parse_tuple(t));
      out.push_back(std::move(r));
    });
    return out;
  }();
  return rows;
}

const std::vector<TransitiveRow>& transitive_table() {
  static const std::vector<TransitiveRow> rows = [] {
    std::vector<TransitiveRow> out;
    each_line(detail::kHurwitzTransitive, [&](const io::json& j) {
      TransitiveRow r;
      r.rule = j.at("rule").get<std::string>();
      r.n = io::parse_coeff(j.at("n"));
      r.d = io::parse_coeff(j.at("d"));
      const Tuple tail = io::parse_tuple(j.at("tail"));
      r.fundamental.assign(r.n - tail.size(), Int(1));
      r.fundamental.insert(r.fundamental.end(), tail.begin(), tail.end());
      out.push_back(std::move(r));
    });
    return out;
  }();
  return rows;
}

const std::vector<BURow>& bu_table() {
  static const std::vector<BURow> rows = [] {
    std::vector<BURow> out;
    each_line(detail::kBaragarUmeda, [&](const io::json& j) {
      BURow r{BUEquation::make(io::parse_coeff(j.at("a")), io::parse_coeff(j.at("b")),
                               io::parse_coeff(j.at("c")), io::parse_coeff(j.at("d")),
                               io::parse_coeff(j.at("e"))),
              {}};
      for (const auto& t : j.at("fundamental")) {
        const Tuple x = io::parse_tuple(t);
        r.fundamental.push_back({x.at(0), x.at(1), x.at(2)});
      }
      std::sort(r.fundamental.begin(), r.fundamental.end());
      out.push_back(std::move(r));
    });
    return out;
  }();
  return rows;
}

}  // namespace hurwitz::fixtures
