#include "wrt/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_util.hpp"

namespace wrt {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(WRT_FIXTURE_DIR) + "/" + name; }

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("wrt_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::ofstream(path_) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

TEST(CliTest, SolveStar) {
  const Outcome o = call({"solve", fixture("star.tree")});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_EQ(o.out, "{\"kind\":\"pair\",\"a\":[1,3],\"b\":[2,4],\"weight_a\":\"1/2\",\"weight_b\":\"1/2\"}\n");
}

TEST(CliTest, SolveReadsStdin) {
  const Outcome o = call({"solve", "-"}, "3\n0 - 1/3\n1 0 1/3\n2 1 1/3\n");
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_EQ(o.out, "{\"kind\":\"path\",\"u\":2,\"path\":[0,1,2],\"weight\":\"1\"}\n");
}

TEST(CliTest, SolveThresholdTooHigh) {
  EXPECT_EQ(call({"solve", fixture("star.tree"), "--threshold", "2/3"}).code, kExitVerifyFailed);
  EXPECT_EQ(call({"solve", fixture("star.tree"), "--threshold", "1/2"}).code, kExitOk);
  EXPECT_EQ(call({"solve", fixture("star.tree"), "--threshold", "half"}).code, kExitBadInput);
}

TEST(CliTest, VerifyTamperedWitness) {
  const Outcome o = call({"verify", fixture("star.tree"), fixture("star_tampered_witness.json")});
  EXPECT_EQ(o.code, kExitVerifyFailed);
  EXPECT_NE(o.out.find("related pair"), std::string::npos) << o.out;
}

TEST(CliTest, VerifyValidWitness) {
  const std::string witness = call({"solve", fixture("star.tree")}).out;
  TempFile file(witness);
  const Outcome o = call({"verify", fixture("star.tree"), file.path()});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_EQ(o.out, "valid\n");
  EXPECT_EQ(call({"verify", fixture("star.tree"), file.path(), "--threshold", "1/4"}).code, kExitOk);
  EXPECT_EQ(call({"verify", fixture("star.tree"), file.path(), "--threshold", "3/4"}).code, kExitVerifyFailed);
}

TEST(CliTest, VerifyMalformedWitness) {
  TempFile file("{not json");
  EXPECT_EQ(call({"verify", fixture("star.tree"), file.path()}).code, kExitBadInput);
  TempFile out_of_range(R"({"kind":"pair","a":[9],"b":[],"weight_a":"0","weight_b":"0"})");
  EXPECT_EQ(call({"verify", fixture("star.tree"), out_of_range.path()}).code, kExitBadInput);
}

TEST(CliTest, GenTightPipedToOracle) {
  const Outcome gen = call({"gen", "tight", "--m", "2", "--eps", "1/20"});
  ASSERT_EQ(gen.code, kExitOk);
  const Outcome oracle = call({"oracle", "-"}, gen.out);
  ASSERT_EQ(oracle.code, kExitOk);
  EXPECT_NE(oracle.out.find("\"best_pair_value\":\"1/3\""), std::string::npos) << oracle.out;
  EXPECT_NE(oracle.out.find("\"best_path_weight\":\"4/9\""), std::string::npos) << oracle.out;
}

TEST(CliTest, OracleLimitAndJobs) {
  const std::string tree = call({"gen", "random", "--n", "16", "--seed", "3", "--max-weight", "9"}).out;
  EXPECT_EQ(call({"oracle", "-"}, tree).code, kExitBadInput);
  const Outcome seq = call({"oracle", "-", "--max-n", "16"}, tree);
  const Outcome par = call({"oracle", "-", "--max-n", "16", "--jobs", "3"}, tree);
  EXPECT_EQ(seq.code, kExitOk);
  EXPECT_EQ(seq.out, par.out);
}

TEST(CliTest, BadInputsExitOne) {
  EXPECT_EQ(call({"solve", "-"}, "2\n0 1 1/2\n1 0 1/2\n").code, kExitBadInput);
  EXPECT_EQ(call({"solve", "/nonexistent/tree"}).code, kExitBadInput);
  EXPECT_EQ(call({"solve", fixture("star.tree"), "--bogus"}).code, kExitBadInput);
  EXPECT_EQ(call({}).code, kExitBadInput);
  EXPECT_EQ(call({"frobnicate"}).code, kExitBadInput);
  EXPECT_EQ(call({"gen", "tight", "--m", "1", "--eps", "1/100"}).code, kExitBadInput);
  EXPECT_EQ(call({"gen", "random", "--n", "0", "--seed", "1", "--max-weight", "3"}).code, kExitBadInput);
  const Outcome o = call({"solve", "-"}, "2\n0 - 1\n1 0 x\n");
  EXPECT_NE(o.err.find("line 3"), std::string::npos) << o.err;
}

TEST(CliTest, ExportDot) {
  const Outcome plain = call({"export-dot", fixture("star.tree")});
  EXPECT_EQ(plain.code, kExitOk);
  EXPECT_EQ(plain.out.rfind("digraph tree {", 0), 0u);
  EXPECT_NE(plain.out.find("0 -> 4;"), std::string::npos);
  const Outcome traced = call({"export-dot", fixture("star.tree"), "--with-trace"});
  EXPECT_NE(traced.out.find("0 [label=\"0\\n0\", fillcolor=green];"), std::string::npos) << traced.out;
  EXPECT_NE(traced.out.find("4 [label=\"4\\n1/4\\nB\", fillcolor=blue, shape=diamond];"), std::string::npos);
  EXPECT_NE(traced.out.find("1 [label=\"1\\n1/4\\nA\", fillcolor=white, shape=box];"), std::string::npos);
}

TEST(CliTest, Bench) {
  const Outcome o = call({"bench", "--n", "1000", "--seed", "1", "--repeat", "3"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_NE(o.out.find("median_ns="), std::string::npos);
  EXPECT_NE(o.out.find("vertices_per_sec="), std::string::npos);
}

// gen -> solve -> verify closes with exit 0, and reruns are byte-identical.
TEST(CliTest, PipeClosure) {
  for (int seed = 0; seed < 100; ++seed) {
    const std::vector<std::string> gen = {"gen", "random", "--n", std::to_string(1 + seed % 70), "--seed",
                                          std::to_string(seed), "--max-weight", "1000"};
    const Outcome tree = call(gen);
    ASSERT_EQ(tree.code, kExitOk);
    ASSERT_EQ(call(gen).out, tree.out);
    const Outcome witness = call({"solve", "-"}, tree.out);
    ASSERT_EQ(witness.code, kExitOk);
    ASSERT_EQ(call({"solve", "-"}, tree.out).out, witness.out);
    TempFile tree_file(tree.out);
    TempFile witness_file(witness.out);
    ASSERT_EQ(call({"verify", tree_file.path(), witness_file.path()}).code, kExitOk) << tree.out << witness.out;
  }
}

TEST(CliTest, HelpExitsZero) {
  const Outcome o = call({"--help"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_NE(o.out.find("solve"), std::string::npos);
}

}  // namespace
}  // namespace wrt
