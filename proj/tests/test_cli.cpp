#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nullkit/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = nullkit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(NULLKIT_TEST_DATA) + "/" + name; }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

void strip_timing(nlohmann::json& j) {
  if (j.is_object()) {
    j.erase("seconds");
    for (auto& [k, v] : j.items()) strip_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j) strip_timing(v);
  }
}

}  // namespace

TEST(Cli, VanishingWorkedExample) {
  auto r = run({"vanishing", "--projective", "--method", "colon", "--input", data("p1.null")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "X0\n");
  for (const char* m : {"saturation", "oracle"})
    EXPECT_EQ(run({"vanishing", "--method", m, "--input", data("p1.null")}).out, "X0\n");
  EXPECT_EQ(run({"vanishing", "--affine", "--input", data("p1.null")}).out, "X0\nX1^2 + X1\n");
}

TEST(Cli, CompareRoundsTable) {
  auto r = run({"compare", "--input", data("p1.null")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto ls = lines(r.out);
  ASSERT_GE(ls.size(), 6u);
  auto column = [](const std::string& row, std::size_t idx) {
    std::istringstream in(row);
    std::string tok;
    for (std::size_t i = 0; i <= idx; ++i) in >> tok;
    return tok;
  };
  EXPECT_EQ(column(ls[0], 2), "rounds");
  EXPECT_EQ(column(ls[1], 0), "colon");
  EXPECT_EQ(column(ls[1], 2), "1");
  EXPECT_EQ(column(ls[2], 0), "saturation");
  EXPECT_EQ(column(ls[2], 2), "2");
  EXPECT_EQ(column(ls[3], 0), "oracle");
  EXPECT_EQ(ls[4], "agree: yes");
  EXPECT_EQ(ls[5], "X0");

  auto j = nlohmann::json::parse(run({"--json", "compare", "--input", data("p1.null")}).out);
  EXPECT_EQ(j["schema_version"], nullkit::cli::kSchemaVersion);
  ASSERT_EQ(j["methods"].size(), 3u);
  EXPECT_EQ(j["methods"][0]["quotient_rounds"], 1);
  EXPECT_EQ(j["methods"][0]["d"], 2);
  EXPECT_EQ(j["methods"][1]["quotient_rounds"], 2);
  for (const auto& m : j["methods"]) EXPECT_EQ(m["gb"], nlohmann::json::array({"X0"}));
  EXPECT_TRUE(j["assertions"][0]["passed"]);

  auto twisted = run({"compare", "--input", data("twisted.null")});
  EXPECT_EQ(twisted.code, 0) << twisted.err;
  auto affine = run({"compare", "--affine", "--input", data("counterexample.null")});
  EXPECT_EQ(affine.code, 0);
  EXPECT_NE(affine.out.find("agree: yes"), std::string::npos);
}

TEST(Cli, SuiteCounterexample) {
  auto r = run({"suite", "counterexample"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("groups passed: 4/4"), std::string::npos);
  EXPECT_EQ(r.out.find("[FAIL]"), std::string::npos);
  auto bad = run({"suite", "counterexample", "--ideal", "1"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("[FAIL]"), std::string::npos);
  EXPECT_EQ(run({"suite", "nosuch"}).code, 2);
}

TEST(Cli, GbPointsParse) {
  auto gb = run({"gb", "--input", data("twisted.null")});
  EXPECT_EQ(gb.code, 0);
  EXPECT_EQ(lines(gb.out).size(), 3u);
  auto lex = run({"gb", "--order", "lex", "--input", data("p1.null")});
  EXPECT_EQ(lex.out, "X0\n");
  EXPECT_EQ(run({"points", "--input", data("p1.null")}).out, "[0:1]\n");
  EXPECT_EQ(run({"points", "--affine", "--input", data("p1.null")}).out, "(0,0)\n(0,1)\n");
  auto norm = run({"parse", "--emit-normalized", "--input", data("tower.null")});
  EXPECT_EQ(norm.code, 0);
  EXPECT_EQ(norm.out, "field GF(2)\ncoeffs GF(2^2)\nvars X0 X1 X2\nideal: X0*X1 + X2^2, X1^2\n");
  EXPECT_EQ(run({"points", "--affine", "--projective", "--input", data("p1.null")}).code, 2);
}

TEST(Cli, IdealOps) {
  auto j = nlohmann::json::parse(
      run({"--json", "ideal-op", "--op", "saturate", "--with", "X0, X1", "--input", data("p1.null")}).out);
  EXPECT_EQ(j["result"]["iterations"], 2);
  EXPECT_EQ(j["result"]["gb"], nlohmann::json::array({"X0"}));
  EXPECT_EQ(run({"ideal-op", "--op", "sum", "--with", "X1", "--input", data("p1.null")}).out, "X1\nX0\n");
  EXPECT_EQ(run({"ideal-op", "--op", "intersect", "--with", "X1", "--input", data("p1.null")}).out, "X0*X1\n");
  EXPECT_EQ(run({"ideal-op", "--op", "quotient", "--with", "X0", "--input", data("p1.null")}).out, "1\n");
  EXPECT_EQ(run({"ideal-op", "--op", "eliminate", "--k", "1", "--input", data("p1.null")}).out, "0\n");
  EXPECT_EQ(run({"ideal-op", "--op", "quotient", "--input", data("p1.null")}).code, 2);
  EXPECT_EQ(run({"ideal-op", "--op", "sum", "--other", data("twisted.null"), "--input", data("p1.null")}).code, 2);
}

TEST(Cli, Certify) {
  auto r = run({"certify", "--input", data("p1.null")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto ls = lines(r.out);
  EXPECT_EQ(ls[0], "d = 2");
  EXPECT_NE(r.out.find("j = 1\n  g = X0*X1\n  l = X0*X1 + X1^2\n"), std::string::npos) << r.out;
  auto m = run({"certify", "--poly", "X0*X1", "--input", data("p1.null")});
  EXPECT_EQ(m.code, 0) << m.err;
  EXPECT_NE(m.out.find("g*f"), std::string::npos);
  EXPECT_EQ(run({"certify", "--poly", "X1", "--input", data("p1.null")}).code, 2);
}

TEST(Cli, EmptyVarietyClassification) {
  auto r = run({"vanishing", "--input", data("empty.null")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out == "empty_irrelevant\n" || r.out == "empty_unit\n") << r.out;
  EXPECT_EQ(run({"compare", "--input", data("empty.null")}).out, r.out);
}

TEST(Cli, Search) {
  auto r = run({"search", "--family", "r1", "--target", "X1", "--ideal", data("counterexample.null")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out)[0], "found after 1 candidates");
  auto ex = run({"search", "--family", "r2", "--target", "X2^2 - X2", "--ideal", data("counterexample.null"),
                 "--bounds", "m=1,degp=2,degargs=1"});
  EXPECT_EQ(ex.code, 0);
  EXPECT_EQ(ex.out.rfind("exhausted after", 0), 0u) << ex.out;
  auto nr = run({"--json", "search", "--nonradical", "--q", "2", "--n", "2", "--maxdeg", "2"});
  EXPECT_EQ(nr.code, 0);
  auto j = nlohmann::json::parse(nr.out);
  EXPECT_TRUE(j["result"]["found"]);
  for (const auto& a : j["assertions"]) EXPECT_TRUE(a["passed"]);
  EXPECT_EQ(run({"search", "--family", "r4", "--target", "X1", "--ideal", data("counterexample.null")}).code, 2);
  EXPECT_EQ(run({"search", "--family", "r1", "--target", "X1", "--ideal", data("counterexample.null"), "--bounds",
                 "oops"})
                .code,
            2);
}

TEST(Cli, InputErrors) {
  auto r = run({"gb", "--input", data("bad_var.null")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 4, column 11"), std::string::npos) << r.err;
  EXPECT_EQ(run({"gb", "--input", data("missing.null")}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"vanishing", "--method", "magic", "--input", data("p1.null")}).code, 2);

  auto j = nlohmann::json::parse(run({"--json", "gb", "--input", data("bad_var.null")}).out);
  EXPECT_EQ(j["exit_code"], 2);
  EXPECT_EQ(j["error"]["kind"], "SyntaxError");
}

TEST(Cli, MixedCoefficientsRejected) {
  const std::string path = ::testing::TempDir() + "/mixed.null";
  std::ofstream(path) << "base GF(2)\ncoeffs GF(4)\npoints GF(2)\nvars X0 X1\nideal: X0 + (t)*X1\n";
  auto r = run({"vanishing", "--input", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("MixedCoefficients"), std::string::npos) << r.err;
  EXPECT_EQ(run({"vanishing", "--input", data("tower.null")}).code, 0);
}

TEST(Cli, DeterministicAcrossThreads) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"compare", "--input", data("twisted.null")},
           {"suite", "counterexample", "--bounds", "m=1,degp=3"},
           {"search", "--family", "r3", "--target", "X1", "--ideal", data("counterexample.null")}}) {
    std::vector<std::string> one{"--json", "--threads", "1"}, many{"--json", "--threads", "4"};
    one.insert(one.end(), args.begin(), args.end());
    many.insert(many.end(), args.begin(), args.end());
    auto a = nlohmann::json::parse(run(one).out);
    auto b = nlohmann::json::parse(run(many).out);
    auto c = nlohmann::json::parse(run(many).out);
    for (auto* j : {&a, &b, &c}) {
      strip_timing(*j);
      j->erase("argv");
    }
    EXPECT_EQ(a.dump(), b.dump());
    EXPECT_EQ(b.dump(), c.dump());
  }
}
