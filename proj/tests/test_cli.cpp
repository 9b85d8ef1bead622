#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "bracetree");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = bracetree::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("enum") {
  auto r = run({"enum", "--kind", "planar", "--weight", "4", "--alphabet", "a"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"a[a,a,a]", "a[a,a[a]]", "a[a[a],a]", "a[a[a,a]]", "a[a[a[a]]]"});
  auto rooted = run({"enum", "--kind", "rooted", "--weight", "5", "--alphabet-size", "1"});
  CHECK(lines(rooted.out).size() == 9);
  auto j = nlohmann::json::parse(run({"enum", "--weight", "3", "--alphabet", "a,b", "--json"}).out);
  CHECK(j["count"] == 16);
  auto zero = run({"enum", "--weight", "0"});
  CHECK(zero.code == 0);
  CHECK(zero.out.empty());
  CHECK(zero.err.find("warning") != std::string::npos);
  CHECK(run({"enum", "--weight", "3", "--grades", "1,2"}).code == 0);
}

TEST_CASE("prod") {
  auto r = run({"prod", "--op", "brace", "--args", "a,b", "--target", "d[c]"});
  CHECK(r.code == 0);
  CHECK(r.out == "d[a,b,c] + d[a,c,b] + d[a,c[b]] + d[c,a,b] + d[c[a],b] + d[c[a,b]]\n");
  CHECK(run({"prod", "--op", "prelie-rooted", "--args", "a", "--target", "d[b,c]"}).out ==
        "d[a,b,c] + d[b,c[a]] + d[c,b[a]]\n");
  CHECK(run({"prod", "--op", "prelie", "--args", "a", "--target", "b[c]"}).out == "b[a,c] + b[c,a] + b[c[a]]\n");
  CHECK(run({"prod", "--op", "star", "--args", "a", "--target", "b[c]"}).out == "b[a,c] + b[c,a]\n");
  CHECK(run({"prod", "--op", "star-rooted", "--args", "a", "--target", "d[c,b]"}).out == "d[a,b,c]\n");
  CHECK(run({"prod", "--op", "shuffle", "--args", "a", "--target", "(b,c)"}).out == "(a,b,c) + (b,a,c) + (b,c,a)\n");
  CHECK(run({"prod", "--op", "prelie", "--args", "2*a - b", "--target", "c"}).out == "2*c[a] - c[b]\n");
  CHECK(run({"prod", "--op", "brace", "--args", "", "--target", "d[c]"}).out == "d[c]\n");

  auto j = nlohmann::json::parse(
      run({"prod", "--op", "brace", "--args", "a,b", "--target", "d[c]", "--json"}).out);
  CHECK(j["terms"].size() == 6);
  CHECK(j["multiplicity"] == "6");
}

TEST_CASE("series") {
  auto r = run({"series", "--kind", "generators", "--alphabet-size", "1", "--order", "7", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"order\":7,\"coeffs\":[\"0\",\"1\",\"0\",\"0\",\"1\",\"3\",\"11\",\"34\"]}\n");
  auto b = run({"series", "--kind", "brace", "--order", "4"});
  CHECK(lines(b.out) == std::vector<std::string>{"0\t0", "1\t1", "2\t1", "3\t2", "4\t5"});
  auto w = nlohmann::json::parse(run({"series", "--kind", "w", "--order", "4", "--json"}).out);
  CHECK(w["coeffs"] == nlohmann::json::array({"0", "1", "1", "3", "8"}));
  auto p = nlohmann::json::parse(run({"series", "--kind", "prelie", "--alphabet-size", "2", "--order", "2", "--json"}).out);
  CHECK(p["coeffs"][2] == "4");
  auto a = nlohmann::json::parse(run({"series", "--kind", "alphabet", "--grades", "1,2,2", "--order", "3", "--json"}).out);
  CHECK(a["coeffs"] == nlohmann::json::array({"0", "1", "2", "0"}));
}

TEST_CASE("verify") {
  auto nap = run({"verify", "--axiom", "nap", "--max-weight", "5", "--trials", "100", "--seed", "42"});
  CHECK(nap.code == 0);
  CHECK(nap.out.find("PASS axiom nap") != std::string::npos);
  auto brace = run({"verify", "--axiom", "brace", "--max-weight", "3", "--alphabet", "a"});
  CHECK(brace.code == 0);
  auto free = run({"verify", "--freeness", "--alphabet-size", "1", "--max-degree", "6"});
  CHECK(free.code == 0);
  CHECK(free.out.find("n=6 dim=42 star_span=31 complement=11 expected_generators=11 prelie_full_rank=yes") !=
        std::string::npos);
  auto j = nlohmann::json::parse(run({"verify", "--freeness", "--alphabet-size", "2", "--max-degree", "3", "--json"}).out);
  CHECK(j["passed"] == true);
  CHECK(j["degrees"][2]["complement"] == 2);
  auto axioms = nlohmann::json::parse(run({"verify", "--axiom", "shuffle", "--json"}).out);
  CHECK(axioms["passed"] == true);
}

TEST_CASE("output file") {
  auto path = std::filesystem::temp_directory_path() / "bracetree_cli_output.json";
  auto r = run({"series", "--kind", "brace", "--order", "3", "--json", "--output", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content == "{\"order\":3,\"coeffs\":[\"0\",\"1\",\"1\",\"2\"]}\n");
  std::filesystem::remove(path);
}

TEST_CASE("usage errors exit with 2") {
  auto bad_tree = run({"prod", "--op", "brace", "--args", "a", "--target", "d["});
  CHECK(bad_tree.code == 2);
  CHECK(bad_tree.err.find("offset 2") != std::string::npos);
  CHECK(bad_tree.err.find("Tree :=") != std::string::npos);
  CHECK(run({"prod", "--args", "a", "--target", "b", "--alphabet", "b"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"enum"}).code == 2);
  CHECK(run({"enum", "--weight", "x"}).code == 2);
  CHECK(run({"series", "--kind", "nope"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "--axiom", "nap", "--freeness"}).code == 2);
  CHECK(run({"prod", "--op", "prelie", "--args", "a,b", "--target", "c"}).code == 2);
  CHECK(run({"enum", "--weight", "2", "--grades", "0"}).code == 2);
  CHECK(run({"series", "--output", "/nonexistent/dir/file"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
