#include "hurwitz/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hurwitz/baragar_umeda.hpp"
#include "hurwitz/enumerate.hpp"
#include "hurwitz/fixtures.hpp"
#include "hurwitz/secret_share.hpp"
#include "hurwitz/serialize.hpp"
#include "hurwitz/vieta.hpp"

namespace hurwitz {

namespace {

using io::json;

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io::FormatError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "@path" reads the argument from a file.
std::string arg_text(const std::string& arg) {
  return !arg.empty() && arg[0] == '@' ? read_file(arg.substr(1)) : arg;
}

std::string paren(std::span<const Int> x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += x[i].get_str();
  }
  return s + ")";
}

// Every tuple is re-checked before it is printed.
void emit_checked(const GHEquation& eq, std::span<const Int> x) { require_solution(eq, x); }
void emit_checked(const BUEquation& eq, const Triple& t) {
  Int r = eval_residual(eq, t);
  if (r != 0) throw NotASolution(std::move(r));
}

json bu_search_json(const bu::Search& s) {
  json sols = json::array();
  for (const Triple& t : s.solutions) {
    emit_checked(s.equation, t);
    sols.push_back(io::tuple_json(t));
  }
  json out = {{"equation", io::to_json(s.equation)}, {"fundamental", sols}, {"unbounded", s.unbounded}};
  if (s.unbounded) out["height_cap"] = s.height_cap.get_str();
  if (s.family) out["family"] = "(2,n,n), fundamental iff d*n^2 >= 4";
  return out;
}

int do_solve(const std::string& eq_text, bool sorted, bool pretty, const std::string& cap,
             std::ostream& out) {
  const io::Equation eq = io::parse_equation(arg_text(eq_text));
  if (const auto* gh = std::get_if<GHEquation>(&eq)) {
    const FundamentalSet set =
        enumerate_fundamental(*gh, sorted ? Canonical::sorted : Canonical::raw);
    if (pretty) {
      out << gh->to_string() << "\n";
      if (set.empty()) out << "  no fundamental solutions\n";
      for (const Tuple& x : set.solutions) {
        emit_checked(*gh, x);
        out << "  " << paren(x) << "  h=" << height(x) << "\n";
      }
      return kOk;
    }
    for (const Tuple& x : set.solutions) {
      emit_checked(*gh, x);
      out << json{{"equation", io::to_json(*gh)}, {"x", io::tuple_json(x)}}.dump() << "\n";
    }
    return kOk;
  }
  const BUEquation& b = std::get<BUEquation>(eq);
  const bu::Search s = bu::enumerate_fundamental(b, Int(cap));
  if (pretty) {
    out << b.to_string() << "\n";
    for (const Triple& t : s.solutions) out << "  " << paren(t) << "\n";
    if (s.unbounded) out << "  infinitely many; listed up to height " << cap << "\n";
    return kOk;
  }
  for (const Triple& t : s.solutions) {
    emit_checked(b, t);
    out << json{{"equation", io::to_json(b)}, {"x", io::tuple_json(t)}}.dump() << "\n";
  }
  if (s.unbounded) {
    json tail = {{"equation", io::to_json(b)}, {"unbounded", true}, {"height_cap", cap}};
    if (s.family) tail["family"] = "(2,n,n), fundamental iff d*n^2 >= 4";
    out << tail.dump() << "\n";
  }
  return kOk;
}

GHEquation need_gh(const io::Equation& eq) {
  if (const auto* gh = std::get_if<GHEquation>(&eq)) return *gh;
  throw ValidationError("this command needs a generalized Hurwitz equation (\"kind\":\"gh\")");
}

int do_reduce(const std::string& eq_text, const std::string& x_text, bool trace, std::ostream& out) {
  const GHEquation eq = need_gh(io::parse_equation(arg_text(eq_text)));
  const Tuple x = io::parse_tuple(arg_text(x_text));
  const Reduction r = reduce(eq, x, trace);
  emit_checked(eq, r.fundamental);
  json o = {{"fundamental", io::tuple_json(r.fundamental)}, {"word", r.word.indices()},
            {"height", height(r.fundamental).get_str()}};
  if (trace) {
    json steps = json::array();
    for (const TraceStep& s : r.trace) steps.push_back(io::to_json(s));
    o["trace"] = steps;
  }
  out << o.dump() << "\n";
  return kOk;
}

int do_classify(std::size_t n, bool pretty, std::ostream& out) {
  for (const FundamentalSet& set : classify_coefficients(n)) {
    if (pretty) {
      out << set.equation.to_string() << ":";
      for (const Tuple& x : set.solutions) out << " " << paren(x);
      out << "\n";
      continue;
    }
    json sols = json::array();
    for (const Tuple& x : set.solutions) {
      emit_checked(set.equation, x);
      sols.push_back(io::tuple_json(x));
    }
    out << json{{"equation", io::to_json(set.equation)}, {"fundamental", sols}}.dump() << "\n";
  }
  return kOk;
}

int do_bu_classify(Coeff e, Coeff c_max, const std::string& cap, bool table1, std::ostream& out) {
  const std::vector<bu::Search> rows = bu::classify(e, {c_max, Int(cap)});
  if (!table1) {
    for (const bu::Search& s : rows) out << bu_search_json(s).dump() << "\n";
    return kOk;
  }
  // Reproduction diff against the embedded table.
  std::vector<bool> used(rows.size(), false);
  std::size_t bad = 0;
  for (const auto& ref : fixtures::bu_table()) {
    if (ref.equation.e() != e) continue;
    json line = {{"equation", io::to_json(ref.equation)}};
    std::string status = "missing";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].equation != ref.equation) continue;
      used[i] = true;
      status = rows[i].solutions == ref.fundamental && !rows[i].unbounded ? "match" : "mismatch";
      json got = json::array();
      for (const Triple& t : rows[i].solutions) got.push_back(io::tuple_json(t));
      line["found"] = got;
    }
    json want = json::array();
    for (const Triple& t : ref.fundamental) want.push_back(io::tuple_json(t));
    line["expected"] = want;
    line["status"] = status;
    bad += status != "match";
    out << line.dump() << "\n";
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (used[i]) continue;
    json line = bu_search_json(rows[i]);
    line["status"] = "extra";
    out << line.dump() << "\n";
    ++bad;
  }
  return bad == 0 ? kOk : kDomain;
}

int do_tree(const std::string& eq_text, const std::string& root_text,
            const std::optional<std::string>& max_height, const std::optional<std::size_t>& max_depth,
            bool dot, std::ostream& out) {
  const GHEquation eq = need_gh(io::parse_equation(arg_text(eq_text)));
  const Tuple root = io::parse_tuple(arg_text(root_text));
  TreeLimit limit;
  if (max_height) limit.max_height = Int(*max_height);
  limit.max_depth = max_depth;
  const std::vector<TreeNode> nodes = tree_expand(eq, root, limit);
  for (const TreeNode& node : nodes) emit_checked(eq, node.tuple);
  if (dot) {
    out << "digraph orbit {\n  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      out << "  n" << i << " [label=\"" << paren(nodes[i].tuple) << "\\nh=" << nodes[i].height
          << "\"];\n";
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i].parent) {
        out << "  n" << *nodes[i].parent << " -> n" << i << " [label=\"" << nodes[i].edge << "\"];\n";
      }
    }
    out << "}\n";
    return kOk;
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    json j = io::to_json(nodes[i]);
    j["id"] = i;
    out << j.dump() << "\n";
  }
  return kOk;
}

std::vector<Int> parse_int_list(const std::string& csv) {
  std::vector<Int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(io::parse_int(json(item)));
  return out;
}

int do_share_deal(std::size_t n, std::size_t t, const std::string& p,
                  const std::optional<std::uint64_t>& seed, const std::optional<std::string>& xs,
                  const std::string& dir, bool to_stdout, std::ostream& out) {
  std::optional<std::vector<Int>> x;
  if (xs) x = parse_int_list(*xs);
  const share::Dealt dealt = share::deal(n, t, io::parse_int(json(p)), x, seed);
  json files = json::array();
  for (const share::Share& s : dealt.shares) {
    if (to_stdout) {
      out << io::to_json(s).dump() << "\n";
      continue;
    }
    const std::filesystem::path path = std::filesystem::path(dir) / ("share_" + std::to_string(s.participant) + ".json");
    std::ofstream f(path);
    if (!f) throw io::FormatError("cannot write " + path.string());
    f << io::to_json(s).dump() << "\n";
    files.push_back(path.string());
  }
  json summary = {{"n", n}, {"t", t}, {"p", dealt.scheme.header.p.get_str()}, {"m", dealt.scheme.m},
                  {"secret", dealt.scheme.secret.get_str()}};
  if (!to_stdout) summary["files"] = files;
  out << summary.dump() << "\n";
  return kOk;
}

int do_share_combine(const std::vector<std::string>& paths, std::ostream& out) {
  std::vector<share::Share> shares;
  for (const std::string& path : paths) {
    const std::string text = read_file(path);
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        shares.push_back(io::parse_share(json::parse(line)));
      } catch (const json::parse_error& e) {
        throw io::FormatError(path + ": malformed JSON: " + e.what());
      }
    }
  }
  const share::Combined c = share::combine(shares);
  if (c.secret) {
    out << json{{"secret", c.secret->get_str()}}.dump() << "\n";
    return kOk;
  }
  out << json{{"missing", c.missing}}.dump() << "\n";
  return kDomain;
}

int do_share_verify(std::size_t n, std::size_t t, const std::string& p,
                    const std::optional<std::uint64_t>& seed, std::ostream& out) {
  const share::Dealt dealt = share::deal(n, t, io::parse_int(json(p)), std::nullopt, seed.value_or(1));
  const share::ThresholdReport rep = share::verify_threshold(dealt.scheme, dealt.shares);
  out << json{{"n", n},
              {"t", t},
              {"passed", rep.passed},
              {"covering_checked", rep.covering_checked},
              {"blocked_checked", rep.blocked_checked},
              {"counterexamples", rep.counterexamples}}
             .dump()
      << "\n";
  return rep.passed ? kOk : kDomain;
}

int do_selfcheck(std::ostream& out) {
  std::size_t failed = 0;
  auto report = [&](const std::string& name, bool ok, json detail = json::object()) {
    json line = {{"check", name}, {"ok", ok}};
    if (!detail.empty()) line["detail"] = detail;
    out << line.dump() << "\n";
    failed += !ok;
  };

  {
    const auto got = classify_coefficients(3);
    bool ok = got.size() == fixtures::ternary_table().size();
    for (const auto& row : fixtures::ternary_table()) {
      const GHEquation eq = GHEquation::make(row.a, row.d);
      const bool hit = std::any_of(got.begin(), got.end(), [&](const FundamentalSet& s) {
        return s.equation == eq && s.solutions == row.fundamental;
      });
      ok = ok && hit;
    }
    report("ternary-table", ok, {{"rows", got.size()}});
  }
  {
    bool ok = true;
    json wrong = json::array();
    for (const auto& row : fixtures::transitive_table()) {
      const auto set = enumerate_fundamental(hurwitz_equation(row.n, row.d), Canonical::sorted);
      if (set.solutions.size() != 1 || set.solutions[0] != row.fundamental) {
        ok = false;
        wrong.push_back(json::array({row.n, row.d}));
      }
    }
    report("transitive-table", ok, {{"failing", wrong}});
  }
  {
    // Each listed row must come out of the search with exactly its solutions.
    // The search also finds equations the table does not list; those are
    // reported, not counted as failures here.
    bool ok = true;
    json extras = json::object();
    for (Coeff e = 1; e <= 3; ++e) {
      const auto rows = bu::classify(e);
      for (const auto& ref : fixtures::bu_table()) {
        if (ref.equation.e() != e) continue;
        const bool hit = std::any_of(rows.begin(), rows.end(), [&](const bu::Search& s) {
          return s.equation == ref.equation && s.solutions == ref.fundamental;
        });
        ok = ok && hit;
      }
      const auto listed = std::count_if(fixtures::bu_table().begin(), fixtures::bu_table().end(),
                                        [&](const fixtures::BURow& r) { return r.equation.e() == e; });
      extras[std::to_string(e)] = static_cast<std::ptrdiff_t>(rows.size()) - listed;
    }
    report("bu-table-rows", ok, {{"unlisted_equations", extras}});
  }
  return failed == 0 ? kOk : kDomain;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fundamental solutions of Markoff-Hurwitz type equations", "hurwitz"};
  app.require_subcommand(1);

  std::string eq_text, x_text, height_cap = "100";
  bool sorted = false, pretty = false, trace = false, dot = false;

  auto* solve = app.add_subcommand("solve", "fundamental solutions of one equation");
  solve->add_option("equation", eq_text, "equation JSON (or @file)")->required();
  solve->add_flag("--sorted", sorted, "Hurwitz only: ascending representatives");
  solve->add_flag("--pretty", pretty, "human-readable output");
  solve->add_option("--height-cap", height_cap, "listing cap for infinite families");

  auto* red = app.add_subcommand("reduce", "descend to the fundamental solution");
  red->add_option("equation", eq_text)->required();
  red->add_option("tuple", x_text, "{\"x\":[...]} or [...]")->required();
  red->add_flag("--trace", trace, "include every descent step");

  std::optional<std::size_t> classify_n;
  std::optional<Coeff> classify_bu;
  auto* cls = app.add_subcommand("classify", "all coefficient vectors of arity n with solutions");
  auto* cls_n = cls->add_option("n", classify_n);
  auto* cls_bu = cls->add_option("--bu", classify_bu, "classify a x^2+b y^2+c z^2 = dxyz+e instead");
  cls_n->excludes(cls_bu);
  cls->add_flag("--pretty", pretty);

  std::optional<std::string> max_height;
  std::optional<std::size_t> max_depth;
  auto* tree = app.add_subcommand("tree", "orbit tree below a fundamental root");
  tree->add_option("equation", eq_text)->required();
  tree->add_option("root", x_text)->required();
  tree->add_option("--max-height", max_height);
  tree->add_option("--max-depth", max_depth);
  tree->add_flag("--dot", dot, "Graphviz output");

  Coeff bu_e = 1, c_max = 40;
  bool table1 = false;
  std::string bu_cap = "60";
  auto* bu_cmd = app.add_subcommand("bu", "a x^2 + b y^2 + c z^2 = d x y z + e");
  bu_cmd->require_subcommand(1);
  auto* bu_classify = bu_cmd->add_subcommand("classify", "equations with fundamental solutions");
  bu_classify->add_option("--e", bu_e)->required();
  bu_classify->add_option("--c-max", c_max);
  bu_classify->add_option("--height-cap", bu_cap);
  bu_classify->add_flag("--table1", table1, "diff against the embedded reference table");
  auto* bu_solve = bu_cmd->add_subcommand("solve", "fundamental solutions of one equation");
  bu_solve->add_option("equation", eq_text)->required();
  bu_solve->add_option("--height-cap", height_cap);
  bu_solve->add_flag("--pretty", pretty);

  std::size_t sn = 0, st = 0;
  std::string sp;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> xs;
  std::string out_dir = ".";
  bool to_stdout = false;
  std::vector<std::string> files;
  auto* sh = app.add_subcommand("share", "threshold secret sharing");
  sh->require_subcommand(1);
  auto* deal = sh->add_subcommand("deal", "deal shares, one file per participant");
  deal->add_option("--n", sn)->required();
  deal->add_option("--t", st)->required();
  deal->add_option("--p", sp, "prime modulus")->required();
  deal->add_option("--seed", seed);
  deal->add_option("--x", xs, "comma-separated secret tuple");
  deal->add_option("--out-dir", out_dir);
  deal->add_flag("--stdout", to_stdout, "print shares instead of writing files");
  auto* comb = sh->add_subcommand("combine", "reconstruct the secret from share files");
  comb->add_option("files", files)->required();
  auto* ver = sh->add_subcommand("verify", "exhaustive threshold check of a fresh scheme");
  ver->add_option("--n", sn)->required();
  ver->add_option("--t", st)->required();
  ver->add_option("--p", sp)->required();
  ver->add_option("--seed", seed);

  auto* self = app.add_subcommand("selfcheck", "compare against the embedded reference tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "hurwitz: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (solve->parsed()) return do_solve(eq_text, sorted, pretty, height_cap, out);
    if (red->parsed()) return do_reduce(eq_text, x_text, trace, out);
    if (cls->parsed()) {
      if (classify_bu) return do_bu_classify(*classify_bu, c_max, bu_cap, false, out);
      if (!classify_n) {
        err << "hurwitz: classify needs <n> or --bu <e>\n";
        return kUsage;
      }
      return do_classify(*classify_n, pretty, out);
    }
    if (tree->parsed()) return do_tree(eq_text, x_text, max_height, max_depth, dot, out);
    if (bu_classify->parsed()) return do_bu_classify(bu_e, c_max, bu_cap, table1, out);
    if (bu_solve->parsed()) {
      if (!std::holds_alternative<BUEquation>(io::parse_equation(arg_text(eq_text)))) {
        throw ValidationError("bu solve needs a \"kind\":\"bu\" equation");
      }
      return do_solve(eq_text, false, pretty, height_cap, out);
    }
    if (deal->parsed()) return do_share_deal(sn, st, sp, seed, xs, out_dir, to_stdout, out);
    if (comb->parsed()) return do_share_combine(files, out);
    if (ver->parsed()) return do_share_verify(sn, st, sp, seed, out);
    if (self->parsed()) return do_selfcheck(out);
  } catch (const NotASolution& e) {
    err << "hurwitz: " << e.what() << "\n";
    return kDomain;
  } catch (const DomainError& e) {
    err << "hurwitz: " << e.what() << "\n";
    return kDomain;
  } catch (const io::FormatError& e) {
    err << "hurwitz: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    // mpz_class rejects malformed numeric strings this way
    err << "hurwitz: invalid number: " << e.what() << "\n";
    return kUsage;
  }
  err << "hurwitz: no command\n";
  return kUsage;
}

}  // namespace hurwitz
