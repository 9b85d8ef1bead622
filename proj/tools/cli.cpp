#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "bracetree/axioms.hpp"
#include "bracetree/enumerate.hpp"
#include "bracetree/error.hpp"
#include "bracetree/freeness.hpp"
#include "bracetree/lincomb.hpp"
#include "bracetree/products.hpp"
#include "bracetree/series.hpp"
#include "bracetree/text.hpp"

namespace bracetree::cli {
namespace {

constexpr const char* kGrammarHelp = R"(Tree syntax:
  Tree := Ident ( "[" Tree ("," Tree)* "]" )?
  Ident := [A-Za-z_][A-Za-z0-9_]*      e.g. d[a,c[b]]
  Children are listed left to right; whitespace between tokens is ignored.
Combinations: c1*tree1 + c2*tree2 - ...  (integer or p/q coefficients,
  '*' optional, a bare tree has coefficient 1)
)";

struct AlphabetFlags {
  std::string symbols;
  std::size_t size = 0;
  std::string grades;
};

struct OutputFlags {
  bool json = false;
  std::string path;
};

void add_alphabet_flags(CLI::App* cmd, AlphabetFlags& f) {
  auto* symbols = cmd->add_option("--alphabet", f.symbols, "Comma-separated decoration symbols, in order");
  auto* size = cmd->add_option("--alphabet-size", f.size, "Use the D symbols x1..xD")->check(CLI::PositiveNumber);
  symbols->excludes(size);
  cmd->add_option("--grades", f.grades, "Comma-separated positive degrees, one per symbol (default all 1)");
}

void add_output_flags(CLI::App* cmd, OutputFlags& f) {
  cmd->add_flag("--json", f.json, "Emit JSON");
  cmd->add_option("--output", f.path, "Write the result to this file instead of standard output");
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\n\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(trim(item));
  return out;
}

// Splits at commas outside brackets and parentheses.
std::vector<std::string> split_top_level(std::string_view s) {
  std::vector<std::string> out;
  if (trim(s).empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

DecorationAlphabet resolve_alphabet(const AlphabetFlags& f, std::size_t default_size,
                                    std::vector<std::string> inferred = {}) {
  std::vector<unsigned> grades;
  if (!f.grades.empty())
    for (const auto& g : split_list(f.grades)) {
      std::size_t used = 0;
      long v = -1;
      try {
        v = std::stol(g, &used);
      } catch (const std::exception&) {
      }
      if (used != g.size() || v <= 0) throw DomainError("invalid grade '" + g + "'");
      grades.push_back(static_cast<unsigned>(v));
    }
  if (!f.symbols.empty()) return DecorationAlphabet(split_list(f.symbols), grades);
  if (f.size > 0) return DecorationAlphabet(DecorationAlphabet::uniform(f.size).names(), grades);
  if (!inferred.empty()) {
    std::sort(inferred.begin(), inferred.end());
    return DecorationAlphabet(std::move(inferred), grades);
  }
  if (!grades.empty()) return DecorationAlphabet(DecorationAlphabet::uniform(grades.size()).names(), grades);
  return DecorationAlphabet::uniform(default_size);
}

class Sink {
 public:
  Sink(const OutputFlags& f, std::ostream& fallback) {
    if (f.path.empty()) {
      stream_ = &fallback;
    } else {
      file_.open(f.path);
      if (!file_) throw DomainError("cannot open output file '" + f.path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

// ------------------------------------------------------------------ enum

struct EnumFlags {
  std::string kind = "planar";
  std::size_t weight = 0;
  AlphabetFlags alphabet;
  OutputFlags output;
};

int run_enum(const EnumFlags& f, std::ostream& out, std::ostream& err) {
  auto alphabet = resolve_alphabet(f.alphabet, 1);
  if (f.weight == 0) err << "warning: weight 0 has no trees; the list is empty\n";
  std::vector<std::string> trees;
  if (f.kind == "planar") {
    for (const auto& t : enumerate_planar(f.weight, alphabet)) trees.push_back(serialize(t, alphabet));
  } else {
    for (const auto& t : enumerate_rooted(f.weight, alphabet)) trees.push_back(serialize(t, alphabet));
  }
  Sink sink(f.output, out);
  if (f.output.json) {
    nlohmann::ordered_json j = {{"kind", f.kind}, {"weight", f.weight}, {"alphabet", alphabet.names()},
                        {"count", trees.size()}, {"trees", trees}};
    *sink << j.dump(2) << '\n';
  } else {
    for (const auto& t : trees) *sink << t << '\n';
  }
  return kSuccess;
}

// ------------------------------------------------------------------ prod

struct ProdFlags {
  std::string op = "brace";
  std::string args;
  std::string target;
  AlphabetFlags alphabet;
  OutputFlags output;
};

template <class Basis>
void emit_comb(const LinComb<Basis>& result, const ProdFlags& f, const DecorationAlphabet& a, std::ostream& out) {
  if (f.output.json) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [b, c] : result) terms.push_back({{"coeff", c.get_str()}, {"basis", serialize(b, a)}});
    nlohmann::ordered_json j = {{"op", f.op}, {"terms", terms}, {"multiplicity", result.multiplicity().get_str()},
                        {"text", format(result, a)}};
    out << j.dump(2) << '\n';
  } else {
    out << format(result, a) << '\n';
  }
}

template <class Basis>
LinComb<Basis> single_argument(const std::vector<LinComb<Basis>>& args, const std::string& op) {
  if (args.size() != 1) throw DomainError("--op " + op + " takes exactly one argument in --args");
  return args.front();
}

int run_prod(const ProdFlags& f, std::ostream& out) {
  auto alphabet = resolve_alphabet(f.alphabet, 1, collect_identifiers(f.args + " " + f.target));
  Sink sink(f.output, out);
  const auto pieces = split_top_level(f.args);

  if (f.op == "brace" || f.op == "prelie" || f.op == "star") {
    std::vector<PlanarComb> args;
    for (const auto& p : pieces) args.push_back(parse_lincomb<PlanarTree>(p, alphabet));
    auto target = parse_lincomb<PlanarTree>(f.target, alphabet);
    PlanarComb result;
    if (f.op == "brace") result = brace(std::span<const PlanarComb>(args), target);
    if (f.op == "prelie") result = prelie_planar(single_argument(args, f.op), target);
    if (f.op == "star") result = star_planar(single_argument(args, f.op), target);
    emit_comb(result, f, alphabet, *sink);
  } else if (f.op == "prelie-rooted" || f.op == "star-rooted") {
    std::vector<RootedComb> args;
    for (const auto& p : pieces) args.push_back(parse_lincomb<RootedTree>(p, alphabet));
    auto target = parse_lincomb<RootedTree>(f.target, alphabet);
    auto x = single_argument(args, f.op);
    emit_comb(f.op == "prelie-rooted" ? prelie_rooted(x, target) : star_rooted(x, target), f, alphabet, *sink);
  } else {
    ForestComb x(parse_forest(f.args, alphabet));
    ForestComb y(parse_forest(f.target, alphabet));
    emit_comb(shuffle(x, y), f, alphabet, *sink);
  }
  return kSuccess;
}

// ------------------------------------------------------------------ series

struct SeriesFlags {
  std::string kind = "generators";
  std::size_t order = 10;
  AlphabetFlags alphabet;
  OutputFlags output;
};

int run_series(const SeriesFlags& f, std::ostream& out) {
  auto alphabet = resolve_alphabet(f.alphabet, 1);
  Series fd = Series::from_alphabet(alphabet, f.order);
  Series s(f.order);
  if (f.kind == "alphabet") s = fd;
  if (f.kind == "brace") s = brace_hilbert(fd, f.order);
  if (f.kind == "prelie") s = prelie_hilbert(fd, f.order);
  if (f.kind == "generators") s = generator_hilbert(fd, f.order);
  if (f.kind == "w") s = w_sequence(fd, f.order);
  Sink sink(f.output, out);
  if (f.output.json) {
    *sink << to_json(s).dump() << '\n';
  } else {
    for (std::size_t n = 0; n <= s.order(); ++n) *sink << n << '\t' << s[n].get_str() << '\n';
  }
  return kSuccess;
}

// ------------------------------------------------------------------ verify

struct VerifyFlags {
  std::string axiom;
  bool freeness = false;
  std::size_t max_weight = 6;
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  std::size_t max_degree = 0;
  bool parallel = false;
  bool timings = false;
  AlphabetFlags alphabet;
  OutputFlags output;
};

int run_axioms(const VerifyFlags& f, std::ostream& out) {
  auto axiom = parse_axiom(f.axiom);
  auto alphabet = resolve_alphabet(f.alphabet, 2);
  SuiteOptions options{.max_weight = f.max_weight, .trials = f.trials, .seed = f.seed};
  auto results = run_axiom_suite(*axiom, alphabet, options);
  bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed(); });

  Sink sink(f.output, out);
  if (f.output.json) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& r : results)
      checks.push_back({{"name", r.name},
                        {"instances", r.instances},
                        {"failures", r.failures},
                        {"passed", r.passed()},
                        {"counterexamples", r.counterexamples}});
    nlohmann::ordered_json j = {{"axiom", f.axiom}, {"alphabet", alphabet.names()}, {"seed", f.seed},
                        {"passed", ok}, {"checks", checks}};
    *sink << j.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      *sink << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.instances << " instances";
      if (!r.passed()) *sink << ", " << r.failures << " failures";
      *sink << ")\n";
      for (const auto& c : r.counterexamples) *sink << "  counterexample: " << c << '\n';
    }
    *sink << (ok ? "PASS" : "FAIL") << " axiom " << f.axiom << '\n';
  }
  return ok ? kSuccess : kVerificationFailed;
}

int run_freeness(const VerifyFlags& f, std::ostream& out) {
  auto alphabet = resolve_alphabet(f.alphabet, 1);
  std::size_t max_degree = f.max_degree ? f.max_degree : default_max_degree(alphabet);
  auto report = verify_freeness(alphabet, max_degree, {.parallel = f.parallel});

  Sink sink(f.output, out);
  if (f.output.json) {
    *sink << to_json(report, f.timings).dump(2) << '\n';
  } else {
    for (const auto& d : report.degrees) {
      *sink << "n=" << d.n << " dim=" << d.dim << " star_span=" << d.star_span << " complement=" << d.complement
            << " expected_generators=" << d.expected_generators
            << " prelie_full_rank=" << (d.prelie_full_rank.value_or(false) ? "yes" : "no");
      if (f.timings) *sink << " seconds=" << d.seconds;
      *sink << '\n';
      if (!d.complement_trees.empty()) {
        *sink << "  generators:";
        for (const auto& t : d.complement_trees) *sink << ' ' << t;
        *sink << '\n';
      }
    }
    for (const auto& msg : report.failures) *sink << "FAIL " << msg << '\n';
    *sink << (report.passed() ? "PASS" : "FAIL") << " freeness up to degree " << max_degree << '\n';
  }
  return report.passed() ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free brace, pre-Lie and NAP algebras on decorated rooted trees", "bracetree"};
  app.require_subcommand(1);
  app.footer(kGrammarHelp);

  EnumFlags ef;
  auto* en = app.add_subcommand("enum", "List all trees of a given weight");
  en->add_option("--kind", ef.kind, "planar or rooted")->check(CLI::IsMember({"planar", "rooted"}));
  en->add_option("--weight", ef.weight, "Total weight")->required();
  add_alphabet_flags(en, ef.alphabet);
  add_output_flags(en, ef.output);

  ProdFlags pf;
  auto* prod = app.add_subcommand("prod", "Evaluate a product of trees or combinations");
  prod->add_option("--op", pf.op, "brace, prelie, star, prelie-rooted, star-rooted or shuffle")
      ->check(CLI::IsMember({"brace", "prelie", "star", "prelie-rooted", "star-rooted", "shuffle"}));
  prod->add_option("--args", pf.args, "Comma-separated arguments (a forest for shuffle)");
  prod->add_option("--target", pf.target, "Right-hand operand")->required();
  add_alphabet_flags(prod, pf.alphabet);
  add_output_flags(prod, pf.output);

  SeriesFlags sf;
  auto* ser = app.add_subcommand("series", "Print a Hilbert series of the decorated tree algebras");
  ser->add_option("--kind", sf.kind, "alphabet, brace, prelie, generators or w")
      ->check(CLI::IsMember({"alphabet", "brace", "prelie", "generators", "w"}));
  ser->add_option("--order", sf.order, "Truncation order");
  add_alphabet_flags(ser, sf.alphabet);
  add_output_flags(ser, sf.output);

  VerifyFlags vf;
  auto* ver = app.add_subcommand("verify", "Run an axiom property suite or the freeness verification");
  auto* axiom = ver->add_option("--axiom", vf.axiom, "prelie, nap, brace, e1 or shuffle")
                    ->check(CLI::IsMember({"prelie", "nap", "brace", "e1", "shuffle"}));
  auto* freeness = ver->add_flag("--freeness", vf.freeness, "Verify NAP freeness and pre-Lie generation degree by degree");
  axiom->excludes(freeness);
  ver->add_option("--max-weight", vf.max_weight, "Largest total weight of random instances");
  ver->add_option("--trials", vf.trials, "Random instances per total weight and configuration");
  ver->add_option("--seed", vf.seed, "Random seed");
  ver->add_option("--max-degree", vf.max_degree, "Largest degree for --freeness (default depends on alphabet size)");
  ver->add_flag("--parallel", vf.parallel, "Verify degrees concurrently");
  ver->add_flag("--timings", vf.timings, "Report wall-clock time per degree");
  add_alphabet_flags(ver, vf.alphabet);
  add_output_flags(ver, vf.output);

  try {
    app.parse(argc, argv);
    if (*ver && vf.axiom.empty() && !vf.freeness) throw CLI::ValidationError("verify needs --axiom or --freeness");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << kGrammarHelp;
    return kUsageError;
  }

  try {
    if (*en) return run_enum(ef, out, err);
    if (*prod) return run_prod(pf, out);
    if (*ser) return run_series(sf, out);
    return vf.freeness ? run_freeness(vf, out) : run_axioms(vf, out);
  } catch (const bracetree::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << kGrammarHelp;
    return kUsageError;
  } catch (const bracetree::Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace bracetree::cli
