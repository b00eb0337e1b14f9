#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "pmatch");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = pmatch::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("pmatch_cli_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST(Cli, EncodeExamples) {
  EXPECT_EQ(run({"encode", "deeeef"}).out, "0 0 1 1 1 0\n");
  EXPECT_EQ(run({"encode", "abc"}).out, "0 0 0\n");
  EXPECT_EQ(run({"encode", "--static", "a", "aba"}).out, "S0 0 S0\n");
  EXPECT_EQ(run({"encode", "ab", "aa"}).out, "0 0\n0 1\n");
}

TEST(Cli, EncodeTokens) {
  EXPECT_EQ(run({"encode", "--symbols", "tokens", "--static", "if", "x if y x"}).out, "0 S0 0 3\n");
}

TEST(Cli, MatchFigureOne) {
  const auto r = run({"match", "--text", "abcbbbaaaca", "--pattern", "deeeef", "--k", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"1", "2", "3", "5", "6"}));
  const auto counts = run({"match", "--text", "abcbbbaaaca", "--pattern", "deeeef", "--report", "counts"});
  EXPECT_EQ(lines(counts.out), (std::vector<std::string>{"1\t2", "2\t2", "3\t1", "4\t3", "5\t1", "6\t2"}));
}

TEST(Cli, MatchIdentical) {
  EXPECT_EQ(run({"match", "--text", "abc", "--pattern", "abc", "--k", "0"}).out, "1\n");
}

TEST(Cli, ThreeWayAgreement) {
  pmatch::experiment::Generator gen(81);
  for (int it = 0; it < 30; ++it) {
    const std::string t = gen.string_over(1 + gen.below(80), "abcdXY");
    const std::string p = gen.string_over(1 + gen.below(std::min<std::size_t>(t.size(), 8)), "abcdXY");
    std::vector<std::string> outs;
    for (const char* alg : {"general", "single", "oracle"}) {
      const auto r = run({"match", "--text", t, "--pattern", p, "--k", "1", "--algorithm", alg, "--static", "XY",
                          "--seed", std::to_string(it)});
      ASSERT_EQ(r.code, 0) << r.err;
      outs.push_back(r.out);
    }
    ASSERT_EQ(outs[0], outs[1]) << t << " / " << p;
    ASSERT_EQ(outs[0], outs[2]) << t << " / " << p;
  }
}

TEST(Cli, SingleWithExplicitModuli) {
  const auto r = run({"match", "--text", "abcbbbaaaca", "--pattern", "deeeef", "--k", "1", "--algorithm", "single",
                      "--mod1", "1000000009", "--mod2", "1000001887", "--base", "131"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "3\n5\n");
  const auto counts = run({"match", "--text", "aab", "--pattern", "cdd", "--k", "1", "--algorithm", "single",
                           "--report", "counts"});
  EXPECT_EQ(counts.out, "1\ttrue\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"match", "--text", "ab"}).code, 2);
  EXPECT_EQ(run({"match", "--text", "a", "--pattern", "ab"}).code, 2);
  EXPECT_EQ(run({"match", "--text", "abc", "--pattern", "ab", "--k", "3"}).code, 2);
  EXPECT_EQ(run({"match", "--text", "abc", "--pattern", "ab", "--k", "2", "--algorithm", "single"}).code, 2);
  EXPECT_EQ(run({"match", "--text", "abc", "--pattern", "ab", "--k", "1", "--algorithm", "single", "--mod1", "1020"})
                .code,
            2);
  EXPECT_EQ(run({"match", "--text", "abcdefghij", "--pattern", "ab", "--algorithm", "oracle"}).code, 2);
  EXPECT_EQ(run({"match", "--text", "abc", "--pattern", "ab", "--algorithm", "fast"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, FileInputsAndIoErrors) {
  const TempDir dir;
  {
    std::ofstream(dir / "t.txt") << "abcbbbaaaca\n";
    std::ofstream(dir / "p.txt") << "deeeef";
  }
  const auto r = run({"match", "--text", "@" + (dir / "t.txt").string(), "--pattern", "@" + (dir / "p.txt").string(),
                      "--k", "2"});
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"1", "2", "3", "5", "6"}));
  EXPECT_EQ(run({"encode", "@" + (dir / "missing.txt").string()}).code, 3);
  EXPECT_EQ(run({"gen", "--n", "5", "--out", (dir / "no" / "such" / "dir.txt").string()}).code, 3);
}

TEST(Cli, GenIsReproducible) {
  const TempDir dir;
  ASSERT_EQ(run({"gen", "--n", "10000", "--alphabet", "ab", "--seed", "4", "--out", (dir / "a.txt").string(),
                 "--pattern-out", (dir / "ap.txt").string()})
                .code,
            0);
  ASSERT_EQ(run({"gen", "--n", "10000", "--alphabet", "ab", "--seed", "4", "--out", (dir / "b.txt").string()}).code,
            0);
  const std::string a = slurp(dir / "a.txt");
  EXPECT_EQ(a, slurp(dir / "b.txt"));
  EXPECT_EQ(a.size(), 10000U);
  EXPECT_EQ(a.find_first_not_of("ab"), std::string::npos);
  EXPECT_EQ(slurp(dir / "ap.txt").size(), 10U);
  ASSERT_EQ(run({"gen", "--n", "0", "--out", (dir / "empty.txt").string()}).code, 0);
  EXPECT_TRUE(slurp(dir / "empty.txt").empty());
}

TEST(Cli, BenchRowCount) {
  const auto r = run({"bench", "--sizes", "200,400", "--m", "5", "--sigma", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 1U + 2U * 2U);
  EXPECT_EQ(rows[0], "algorithm,n,m,sigma,k,millis");
  EXPECT_EQ(rows[1].rfind("general,200,5,4,", 0), 0U);
}

TEST(Cli, CollisionsSummary) {
  const auto r = run({"collisions", "--runs", "5", "--n", "500", "--mod1", "1000000009", "--seed", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("incorrect=0 ", 0), 0U);
  EXPECT_EQ(run({"collisions", "--runs", "5", "--mod1", "1000"}).code, 2);
}
