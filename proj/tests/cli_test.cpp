#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cfc/cli.hpp"
#include "cfc/fixtures.hpp"
#include "cfc/json_io.hpp"
#include "support/small_graphs.hpp"

namespace cfc {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cfc_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    auto p = (dir_ / name).string();
    std::ofstream(p) << text;
    return p;
  }
  std::string graph_file(const std::string& name, const Graph& g) {
    return file(name, render_graph(g));
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "cfc");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    CliRun r;
    r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
  }

  fs::path dir_;
};

TEST_F(Cli, AnalyzePaw) {
  auto r = run({"analyze", graph_file("paw.txt", fixtures::paw())});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["result"]["h"], 1);
  ASSERT_EQ(j["result"]["components"].size(), 1u);
  EXPECT_EQ(j["result"]["components"][0]["kind"], "ORDER2");
  EXPECT_EQ(j["result"]["claw_free"], true);
}

TEST_F(Cli, AnalyzeCycleAndClaw) {
  auto c5 = run({"analyze", graph_file("c5.txt", fixtures::cycle(5))}).json();
  EXPECT_TRUE(c5["result"]["bridges"].empty());
  EXPECT_EQ(c5["result"]["h"], 0);
  auto claw = run({"analyze", graph_file("k13.txt", fixtures::star(3))}).json();
  EXPECT_EQ(claw["result"]["claw_free"], false);
}

TEST_F(Cli, CfcPathFormulaAndOracle) {
  auto p8 = run({"cfc", graph_file("p8.txt", fixtures::path(8))}).json();
  EXPECT_EQ(p8["result"]["kind"], "exact");
  EXPECT_EQ(p8["result"]["value"], 3);
  EXPECT_EQ(p8["method"], "PATH_FORMULA");

  auto c4 = graph_file("c4.txt", fixtures::cycle(4));
  for (auto args : {std::vector<std::string>{"cfc", "--method", "oracle", c4},
                    std::vector<std::string>{"oracle", c4}}) {
    auto j = run(args).json();
    EXPECT_EQ(j["result"]["value"], 2);
    EXPECT_EQ(j["method"], "ORACLE");
  }
}

TEST_F(Cli, FormulaRefusesSpider) {
  auto r = run({"cfc", "--method", "formula", graph_file("spider.txt", fixtures::spider(3, 2))});
  EXPECT_EQ(r.code, cli::kMethodRefused);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST_F(Cli, ColorThenVerifyRoundTrip) {
  for (const Graph& g : {fixtures::cycle(4), fixtures::paw(), fixtures::triangle_chain(2, 3)}) {
    auto gf = graph_file("g.txt", g);
    auto cf = path("coloring.json");
    ASSERT_EQ(run({"color", gf, "-o", cf}).code, 0);
    auto v = run({"verify", gf, "--coloring", cf});
    ASSERT_EQ(v.code, 0) << v.err;
    EXPECT_EQ(v.json()["result"]["status"], "PASS");
  }
}

TEST_F(Cli, VerifyReportsEndpointsOfFailingPath) {
  auto gf = file("p4.txt", "a b\nb c\nc d\n");
  auto cf = file("ones.json", R"({"num_colors": 1, "assignment": {"a|b": 1, "b|c": 1, "c|d": 1}})");
  auto j = run({"verify", gf, "--coloring", cf}).json();
  EXPECT_EQ(j["result"]["status"], "FAIL");
  EXPECT_EQ(j["result"]["failing_pair"], Json::array({"a", "c"}));

  auto p5 = file("p5.txt", "a b\nb c\nc d\nd e\n");
  auto ruler = file("ruler.json", R"({"assignment": {"a|b": 1, "b|c": 2, "c|d": 1, "d|e": 3}})");
  EXPECT_EQ(run({"verify", p5, "--coloring", ruler}).json()["result"]["status"], "PASS");
}

TEST_F(Cli, PartialColoringIsRejected) {
  auto gf = file("p4.txt", "a b\nb c\nc d\n");
  auto cf = file("partial.json", R"({"assignment": {"a|b": 1, "x|y": 2}})");
  auto r = run({"verify", gf, "--coloring", cf});
  EXPECT_EQ(r.code, cli::kBadColoring);
  EXPECT_NE(r.err.find("x|y"), std::string::npos);
  EXPECT_NE(r.err.find("b|c"), std::string::npos);
}

TEST_F(Cli, LineOfClawIsTriangle) {
  auto r = run({"line", graph_file("k13.txt", fixtures::star(3)), "-k", "1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(testing::isomorphic(parse_graph(r.out), fixtures::complete(3)));

  auto out = path("l.txt");
  auto j = run({"line", graph_file("p4.txt", fixtures::path(4)), "-k", "2", "-o", out}).json();
  EXPECT_EQ(j["result"]["n"], 2);
  auto prov = Json::parse(std::ifstream(out + ".provenance.json"));
  EXPECT_EQ(prov["schema"], 1);
  EXPECT_EQ(prov["k"], 2);
}

TEST_F(Cli, IterateP9) {
  auto j = run({"iterate", graph_file("p9.txt", fixtures::path(9)), "-k", "8"}).json();
  EXPECT_EQ(j["result"]["trajectory"], Json::array({4, 3, 3, 3, 3, 2, 2, 1, 0}));
}

TEST_F(Cli, K0OfK6) {
  auto j = run({"k0", graph_file("k6.txt", fixtures::complete(6))}).json();
  EXPECT_EQ(j["result"]["k0"], 1);
  EXPECT_EQ(j["result"]["first_k_le_2"], 0);
  auto k3 = run({"k0", graph_file("k3.txt", fixtures::complete(3))}).json();
  EXPECT_TRUE(k3["result"]["k0"].is_null());
}

TEST_F(Cli, ScaleLimitsExitFour) {
  auto big = graph_file("k4.txt", fixtures::complete(4));
  auto r = run({"--edge-cap", "20", "line", big, "-k", "3"});
  EXPECT_EQ(r.code, cli::kScaleLimit);
  EXPECT_NE(r.err.find("edge_cap"), std::string::npos);
  auto o = run({"--max-edges", "4", "oracle", graph_file("p8.txt", fixtures::path(8))});
  EXPECT_EQ(o.code, cli::kScaleLimit);
}

TEST_F(Cli, InputErrorsExitOne) {
  EXPECT_EQ(run({"cfc", file("bad.txt", "a b c\n")}).code, cli::kInputError);
  EXPECT_EQ(run({"cfc", file("split.txt", "a b\nc d\n")}).code, cli::kInputError);
  EXPECT_EQ(run({"cfc", path("missing.txt")}).code, cli::kInputError);
}

TEST_F(Cli, QuietReportsAreByteIdentical) {
  auto gf = graph_file("tc.txt", fixtures::triangle_chain(2, 3));
  auto a = run({"--quiet", "cfc", gf});
  auto b = run({"--quiet", "cfc", gf});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.find("elapsed_ms"), std::string::npos);
  EXPECT_NE(run({"cfc", gf}).out.find("elapsed_ms"), std::string::npos);
}

TEST_F(Cli, DemoFixtures) {
  auto r = run({"--demo", "petersen"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse_graph(r.out).size(), 15u);
  EXPECT_EQ(run({"--demo", "nonsense"}).code, cli::kInputError);
}

TEST_F(Cli, DotInput) {
  auto gf = file("g.dot", "graph G { a -- b -- c -- a; c -- d; }\n");
  auto j = run({"cfc", gf}).json();
  EXPECT_EQ(j["result"]["value"], 2);
  EXPECT_EQ(j["input"]["n"], 4);
}

}  // namespace
}  // namespace cfc
