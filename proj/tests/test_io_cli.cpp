#include "support.hpp"

#include <lralg/cli.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

using namespace lralg;

namespace {

std::string data(const std::string& f) { return std::string(LRALG_DATA_DIR) + "/" + f; }

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("lralg_test_" + name)).string();
}

void expect_parse_error(const std::string& text, int line, int column) {
  try {
    parse_algebra(text);
    ADD_FAILURE() << "no error for:\n" << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

}  // namespace

TEST(AlgebraFormat, RoundTripsEveryCatalogInstance) {
  for (const auto& e : catalog_entries())
    for (const auto& s : e.samples()) {
      LRAlgebra a = catalog_get(e.name, s);
      std::string text = print_algebra(e.name, a);
      AlgebraFile f = parse_algebra(text);
      EXPECT_EQ(f.name, e.name);
      EXPECT_EQ(f.lr().product(), a.product());
      EXPECT_EQ(f.lie(), a.lie());
      EXPECT_EQ(print_algebra(f), text);
    }
}

TEST(AlgebraFormat, AcceptsCommentsSignsAndCoefficients) {
  AlgebraFile f = parse_algebra(
      "# comment\nalgebra t\ndim 3\n\n[2,1] = -e3   # reversed order\nproduct\n(1,2) = 1/2 e3\n(2,1) = -1/2*e3\n");
  EXPECT_EQ(f.lie(), n3_lie());
  EXPECT_EQ(f.lr().product(), catalog_get("n3/A3").product());
  EXPECT_FALSE(parse_algebra("algebra t\ndim 2\n").has_product());
}

TEST(AlgebraFormat, ErrorsCarryLineAndColumn) {
  expect_parse_error("algebra t\ndim 3\n[1,2] = 1/0*e3\n", 3, 9);
  expect_parse_error("algebra t\ndim 3\n[1,4] = e3\n", 3, 4);
  expect_parse_error("algebra t\ndim 3\n[1,2] = e3\n[2,1] = e3\n", 4, 1);
  expect_parse_error("algebra t\ndim 3\nbracket 1\n", 3, 1);
  expect_parse_error("dim 3\n", 2, 1);  // missing headers are reported past the last line
  expect_parse_error("algebra t\ndim 3\n(1,2) = e3\n", 3, 1);
  expect_parse_error("algebra t\ndim 3\n[1,1] = e2\n", 3, 1);
}

TEST(ExtensionFormat, RoundTrip) {
  ExtensionFile f = load_extension(data("ext_split.ext"));
  std::string text = print_extension(f.name, f.data, f.b_product);
  ExtensionFile g = parse_extension(text);
  EXPECT_EQ(g.data.b, f.data.b);
  EXPECT_EQ(g.data.a_dim, f.data.a_dim);
  EXPECT_EQ(g.data.phi, f.data.phi);
  EXPECT_EQ(g.data.omega, f.data.omega);
  EXPECT_EQ(g.b_product, f.b_product);
  EXPECT_EQ(print_extension(g.name, g.data, g.b_product), text);
}

TEST(Emit, FormatsEquations) {
  Polynomial p = Polynomial::variable(0) * Polynomial::variable(4) - Polynomial::variable(1) * Polynomial::variable(1) -
                 Polynomial::variable(1);
  EXPECT_EQ(format_equation(p, [](Var v) { return lr_var_name(2, v); }),
            "1 * x[1][1][1] * x[2][1][1] - 1 * x[1][1][2]^2 - 1 * x[1][1][2]");
}

TEST(Cli, CheckCompleteAlgebra) {
  CliRun r = run({"check", data("n3_A3.alg")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "LR axioms: PASS; complete: yes; lemma suite: PASS\n");
}

TEST(Cli, CheckFailures) {
  CliRun bad = run({"check", data("n3_not_lr.alg")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.out.rfind("LR axioms: FAIL", 0), 0u) << bad.out;
  CliRun malformed = run({"check", data("malformed.alg")});
  EXPECT_EQ(malformed.code, 2);
  EXPECT_NE(malformed.err.find("line"), std::string::npos);
  EXPECT_EQ(run({"check", data("missing.alg")}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, Series) {
  CliRun r = run({"series", data("g13.alg")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "gamma: 13 9 5 0; derived: 13 9 0; two-step solvable: yes");
}

TEST(Cli, CatalogVerify) {
  CliRun r = run({"catalog", "verify", "n3/"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS n3/A3()  complete yes"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("instances pass\n"), std::string::npos);
  EXPECT_EQ(run({"catalog", "verify", "zz"}).code, 2);
  EXPECT_EQ(run({"catalog", "dump", "n3/A9"}).code, 2);
  EXPECT_EQ(run({"catalog", "dump", "n3/A1"}).code, 2);
}

TEST(Cli, CatalogDumpRoundTripsThroughCheck) {
  CliRun d = run({"catalog", "dump", "n4/A4", "--params", "1,0,1"});
  ASSERT_EQ(d.code, 0) << d.err;
  std::string path = temp_path("dump.alg");
  std::ofstream(path) << d.out;
  CliRun c = run({"check", path});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out.rfind("LR axioms: PASS", 0), 0u);
  std::remove(path.c_str());
}

TEST(Cli, Constructions) {
  std::string path = temp_path("fil.alg");
  CliRun f = run({"construct", "filiform", "--n", "6", "--coeffs", "1,-2", "--out", path});
  ASSERT_EQ(f.code, 0) << f.err;
  EXPECT_EQ(run({"check", path}).out, "LR axioms: PASS; complete: yes; lemma suite: PASS\n");
  std::remove(path.c_str());
  EXPECT_EQ(run({"construct", "halfad", data("n4.alg")}).code, 1);
  EXPECT_EQ(run({"construct", "halfad", data("free2-3.alg")}).code, 0);
  EXPECT_EQ(run({"construct", "free3", "--n", "2"}).code, 0);
  EXPECT_EQ(run({"construct", "free4-2gen"}).code, 0);
  EXPECT_EQ(run({"construct", "extension", data("ext_invertible.ext")}).code, 0);
  EXPECT_EQ(run({"construct", "extension", data("ext_split.ext")}).code, 0);
  EXPECT_EQ(run({"construct", "extension", data("ext_invertible.ext"), "--generator", "2"}).code, 1);
}

TEST(Cli, ConstraintsEmit) {
  std::string path = temp_path("r2.eqs");
  CliRun r = run({"constraints", data("r2.alg"), "--reduce", "--emit", path});
  ASSERT_EQ(r.code, 0) << r.err;
  std::string text = read_text_file(path);
  EXPECT_NE(text.find("1 * x[1][1][1] * x[2][1][2] - 1 * x[2][1][1]^2 - 1 * x[2][1][1] = 0\n"), std::string::npos) << text;
  std::remove(path.c_str());
}

TEST(Cli, SolveG13) {
  CliRun r = run({"solve", data("g13.alg")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("status: Inconsistent\n", 0), 0u) << r.out;
}

TEST(Cli, Iso) {
  CliRun r = run({"iso", data("r2_A2.alg"), data("r2_A3.alg")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("DistinguishedBy: completeness", 0), 0u) << r.out;
  CliRun s = run({"iso", data("n3_A3.alg"), data("n3_A3.alg")});
  EXPECT_EQ(s.out.rfind("Found", 0), 0u);
  EXPECT_EQ(run({"iso", data("r2_A2.alg"), data("n3_A3.alg")}).code, 2);
  EXPECT_EQ(run({"iso", data("n3.alg"), data("n3_A3.alg")}).code, 2);
}

TEST(Cli, OutputIsDeterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"catalog", "verify", "r2/"}, {"series", data("n4.alg")}, {"--json", "check", data("n3_A3.alg")}})
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, Json) {
  CliRun r = run({"--json", "check", data("n3_A3.alg")});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "check");
  EXPECT_EQ(j["lr_axioms"], "PASS");
  EXPECT_EQ(j["complete"], true);
  CliRun s = run({"--json", "series", data("g13.alg")});
  auto k = nlohmann::json::parse(s.out);
  EXPECT_EQ(k["gamma"], (std::vector<int>{13, 9, 5, 0}));
  EXPECT_EQ(k["nilpotency_class"], 3);
}
