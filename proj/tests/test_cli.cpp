#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cobrack/cli.hpp"

using namespace cobrack;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override { unsetenv("COBRACK_MODE"); }
  void TearDown() override { unsetenv("COBRACK_MODE"); }
};

}  // namespace

TEST_F(Cli, CobracketOfGenusThreeWord) {
  const Result r = run({"cobracket", "--genus", "3", "--word", "c4 c6 c3 c1- c5- c4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "[c4 c6 c3 c1- c5- c4]  genus 3, dehn, level 1\n"
            "  + [c1- c3] x [c4 c4 c6 c5-]\n"
            "  - [c1- c5- c4 c6 c3] x [c4]\n"
            "  + [c4] x [c1- c5- c4 c6 c3]\n"
            "  - [c4 c4 c6 c5-] x [c1- c3]\n");
  EXPECT_TRUE(r.err.empty());
}

TEST_F(Cli, ZeroAndBadIndex) {
  const Result zero = run({"cobracket", "--genus", "2", "--word", "c1"});
  EXPECT_EQ(zero.code, 0);
  EXPECT_NE(zero.out.find("  0\n"), std::string::npos);
  const Result bad = run({"cobracket", "--genus", "2", "--word", "c9"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("generator index 9"), std::string::npos);
  EXPECT_NE(bad.err.find("outside 1..4"), std::string::npos);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"cobracket", "--word", "c1"}).code, 2);
  EXPECT_EQ(run({"cobracket", "--genus", "2"}).code, 2);
  EXPECT_EQ(run({"cobracket", "--genus", "1", "--word", "c1"}).code, 2);
  EXPECT_EQ(run({"cobracket", "--genus", "2", "--word", "c1", "--mode", "free"}).code, 2);
  EXPECT_EQ(run({"cobracket", "--genus", "2", "--word", "c1", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"coproduct-gen", "--genus", "2", "--word", ""}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, ThinWrappers) {
  EXPECT_EQ(run({"level", "--genus", "2", "--word", "c1 c2 c1 c2"}).out, "2\n");
  EXPECT_EQ(run({"level", "--genus", "2", "--word", ""}).out, "0\n");
  const Result bv = run({"coproduct-bv", "--genus", "2", "--word", "c1 c1 c1"});
  EXPECT_EQ(bv.code, 0);
  EXPECT_EQ(bv.out, "[c1 c1 c1]  genus 2, dehn, level 3\n  0\n");
  EXPECT_EQ(run({"relator", "--genus", "1"}).out, "c1 c2- c1- c2\n");
  EXPECT_EQ(run({"relator", "--genus", "2", "--format", "json"}).out,
            "{\"genus\":2,\"relator\":[[1,1],[2,-1],[3,1],[4,-1],[1,-1],[2,1],[3,-1],[4,1]]}\n");
  EXPECT_EQ(run({"normalize", "--genus", "2", "--word", "c2- c1 c2"}).out, "[c1]\n");
  EXPECT_EQ(run({"normalize", "--genus", "2", "--word", "c3 c2- c1"}).out,
            run({"normalize", "--genus", "2", "--word", "c1 c2- c3"}).out);
  EXPECT_EQ(run({"normalize", "--genus", "2", "--word", "c1 c2- c3 c4- c1- c2 c3- c4"}).out,
            "[]\n");
}

TEST_F(Cli, GeneratorCoproductDividesByLevel) {
  const Result bv = run({"coproduct-bv", "-g", "2", "-w", "c1 c2 c3 c1 c2 c3", "--format", "json"});
  const Result gen = run({"coproduct-gen", "-g", "2", "-w", "c1 c2 c3 c1 c2 c3", "--format", "json"});
  EXPECT_EQ(bv.code, 0);
  EXPECT_EQ(gen.code, 0);
  EXPECT_NE(bv.out.find("\"level\":2"), std::string::npos);
  EXPECT_NE(bv.out.find("\"coeff\":2"), std::string::npos);
  EXPECT_EQ(gen.out.find("\"coeff\":2"), std::string::npos);
}

TEST_F(Cli, ModeFromEnvironment) {
  setenv("COBRACK_MODE", "literal", 1);
  EXPECT_NE(run({"cobracket", "-g", "2", "-w", "c1 c2"}).out.find("literal"), std::string::npos);
  EXPECT_NE(run({"cobracket", "-g", "2", "-w", "c1 c2", "-m", "dehn"}).out.find("dehn"),
            std::string::npos);
  setenv("COBRACK_MODE", "bogus", 1);
  EXPECT_EQ(run({"cobracket", "-g", "2", "-w", "c1 c2"}).code, 2);
}

TEST_F(Cli, JsonAndLatex) {
  const Result json =
      run({"cobracket", "-g", "3", "-w", "c4 c6 c3 c1- c5- c4", "--format", "json", "-m", "literal"});
  EXPECT_EQ(json.out.rfind("{\"genus\":3,", 0), 0u);
  EXPECT_NE(json.out.find("\"mode\":\"literal\""), std::string::npos);
  const Result latex = run({"cobracket", "-g", "3", "-w", "c4 c6 c3 c1- c5- c4", "--format", "latex"});
  EXPECT_EQ(latex.out.rfind("[c_{1}^{-1} c_{3}]\\times[c_{4} c_{4} c_{6} c_{5}^{-1}]", 0), 0u);
}

TEST_F(Cli, BatchKeepsOrderAndReportsFailures) {
  std::string content = "# header\n";
  for (int i = 1; i <= 4; ++i) content += "c" + std::to_string(i) + " c1 c2  # word " + std::to_string(i) + "\n";
  content += "\n   \nc7\nc2 c3\n";
  const auto path = temp_file("cobrack_batch.txt", content);
  const Result r = run({"level", "-g", "2", "--file", path.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.out, "1\n1\n1\n1\n1\n");
  EXPECT_NE(r.err.find("line 8:"), std::string::npos);

  const Result ok = run({"cobracket", "-g", "2", "--file", path.string(), "--format", "json"});
  std::istringstream lines(ok.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    EXPECT_EQ(line.front(), '{');
    ++n;
  }
  EXPECT_EQ(n, 5);
  EXPECT_EQ(run({"level", "-g", "2", "--file", "/nonexistent/words"}).code, 2);
  std::filesystem::remove(path);
}

TEST_F(Cli, OracleCheck) {
  const Result fixture = run({"oracle-check", "-g", "2", "-w", "c1 c1 c3 c1- c3"});
  EXPECT_EQ(fixture.code, 0);
  EXPECT_NE(fixture.out.find("(6 crossings)"), std::string::npos);

  const Result random = run({"oracle-check", "--random", "500", "--max-len", "12", "--seed", "7"});
  EXPECT_EQ(random.code, 0) << random.out;
  EXPECT_EQ(random.out, "checked 1500 words: 1500 matched\n");
  EXPECT_EQ(run({"oracle-check", "--random", "500", "--max-len", "12", "--seed", "7", "-v"}).out,
            run({"oracle-check", "--random", "500", "--max-len", "12", "--seed", "7", "-v"}).out);

  EXPECT_EQ(run({"oracle-check", "-w", "c1"}).code, 2);
  EXPECT_EQ(run({"oracle-check"}).code, 2);
}

TEST_F(Cli, OracleCheckSvg) {
  const auto path = std::filesystem::temp_directory_path() / "cobrack_fig3.svg";
  const Result r = run({"oracle-check", "-g", "2", "-w", "c1 c1 c3 c1- c3", "--svg", path.string()});
  EXPECT_EQ(r.code, 0);
  std::ifstream in(path);
  const std::string svg((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::size_t crossings = 0;
  for (auto p = svg.find("class=\"crossing\""); p != std::string::npos;
       p = svg.find("class=\"crossing\"", p + 1)) {
    ++crossings;
  }
  EXPECT_EQ(crossings, 6u);
  std::filesystem::remove(path);
}
