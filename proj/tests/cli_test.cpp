#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "stylo/cli.hpp"
#include "stylo/common.hpp"
#include "stylo/genharness.hpp"
#include "test_support.hpp"

using namespace stylo;
using namespace stylo::testing;
using nlohmann::json;

namespace {

const std::filesystem::path kCorpus = std::filesystem::path(STYLO_SOURCE_DIR) / "data" / "synthetic_corpus";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string s(const std::filesystem::path& p) { return p.string(); }

std::size_t line_count(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST(Cli, HelpExitsZero) {
  const Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("analyze"), std::string::npos);
}

TEST(Cli, NoSubcommandIsUsageError) { EXPECT_EQ(run({}).code, cli::kUsage); }

TEST(Cli, UnknownFlagIsUsageError) { EXPECT_EQ(run({"analyze", "--bogus"}).code, cli::kUsage); }

TEST(Cli, AnalyzeJsonUsesCanonicalKeys) {
  TempDir dir;
  write_text(dir / "a.py", "if x: print(x)\n");
  const Result r = run({"analyze", "--format", "json", s(dir / "a.py")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  const json& m = j[0]["metrics"];
  ASSERT_EQ(m.size(), kNumFeatures);
  for (auto name : kFeatureNames) EXPECT_TRUE(m.contains(std::string(name))) << name;
  EXPECT_EQ(m["sloc"], 1);
  EXPECT_EQ(m["lloc"], 2);
  EXPECT_TRUE(m["sloc"].is_number_integer());
}

TEST(Cli, AnalyzeTableHasHeaderAndOneRowPerFile) {
  TempDir dir;
  write_text(dir / "a.py", "x = 1\n");
  write_text(dir / "b.py", "y = 2\n");
  const Result r = run({"analyze", s(dir / "a.py"), s(dir / "b.py")});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(line_count(r.out), 3u);
  EXPECT_TRUE(r.out.starts_with("file\tcyclomatic_complexity\t"));
}

TEST(Cli, AnalyzeEmptyPathListExitsOne) {
  const Result r = run({"analyze"});
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, AnalyzeMixedValidInvalidExitsThree) {
  TempDir dir;
  write_text(dir / "ok.py", "x = 1\n");
  write_text(dir / "bad.py", "x = (\n");
  const Result r = run({"analyze", "--format", "json", s(dir / "ok.py"), s(dir / "bad.py")});
  EXPECT_EQ(r.code, cli::kLex);
  const json j = json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_TRUE(j[0].contains("metrics"));
  EXPECT_TRUE(j[1].contains("error"));
  EXPECT_NE(r.err.find("bad.py"), std::string::npos);
}

TEST(Cli, MissingInputFileExitsTwo) {
  EXPECT_EQ(run({"analyze", "/nonexistent/stylo/file.py"}).code, cli::kIo);
  EXPECT_EQ(run({"evaluate", "--model", "/nonexistent/m.json", "--features", "/nonexistent/f.csv"}).code, cli::kIo);
}

TEST(Cli, UnknownModelKindExitsOne) {
  TempDir dir;
  ASSERT_EQ(run({"featurize", "--corpus", s(kCorpus), "--out", s(dir / "f.csv")}).code, 0);
  EXPECT_EQ(run({"train", "--features", s(dir / "f.csv"), "--model", "SVM", "--out", s(dir / "m.json")}).code,
            cli::kUsage);
  EXPECT_EQ(run({"train", "--features", s(dir / "f.csv"), "--model", "KNN", "--k", "4", "--out", s(dir / "m.json")})
                .code,
            cli::kUsage);
}

TEST(Cli, SingleClassFeaturesExitFour) {
  TempDir dir;
  write_text(dir / "c/ADS/p1/chatgpt.py", "x = 1\n");
  write_text(dir / "c/ADS/p2/chatgpt.py", "y = 2\n");
  ASSERT_EQ(run({"featurize", "--corpus", s(dir / "c"), "--out", s(dir / "f.csv")}).code, 0);
  EXPECT_EQ(run({"train", "--features", s(dir / "f.csv"), "--model", "DT", "--train-fraction", "1", "--out",
                 s(dir / "m.json")})
                .code,
            cli::kDegenerate);
}

TEST(Cli, FeaturizeTrainEvaluateIsByteIdentical) {
  TempDir a, b;
  for (const TempDir* d : {&a, &b}) {
    ASSERT_EQ(run({"featurize", "--corpus", s(kCorpus), "--out", s(*d / "f.csv")}).code, 0);
    const Result t = run({"train", "--features", s(*d / "f.csv"), "--model", "RF", "--seed", "11", "--grid", "off",
                          "--out", s(*d / "m.json"), "--test-out", s(*d / "test.csv")});
    ASSERT_EQ(t.code, 0) << t.err;
    write_text(*d / "train.json", t.out);
    ASSERT_EQ(run({"evaluate", "--model", s(*d / "m.json"), "--features", s(*d / "test.csv"), "--per-category",
                   "--out", s(*d / "eval.json")})
                  .code,
              0);
  }
  for (const char* f : {"f.csv", "m.json", "test.csv", "train.json", "eval.json"}) {
    EXPECT_EQ(read_text(a / f), read_text(b / f)) << f;
  }
  EXPECT_EQ(line_count(read_text(a / "f.csv")), 61u);
}

TEST(Cli, OmittedSeedMeansZero) {
  TempDir dir;
  ASSERT_EQ(run({"featurize", "--corpus", s(kCorpus), "--out", s(dir / "f.csv")}).code, 0);
  const Result implicit = run({"train", "--features", s(dir / "f.csv"), "--model", "RF", "--out", s(dir / "a.json")});
  const Result explicit_zero =
      run({"train", "--features", s(dir / "f.csv"), "--model", "RF", "--seed", "0", "--out", s(dir / "b.json")});
  ASSERT_EQ(implicit.code, 0);
  EXPECT_EQ(implicit.out, explicit_zero.out);
  EXPECT_EQ(read_text(dir / "a.json"), read_text(dir / "b.json"));
}

TEST(Cli, GridSearchSelectsFromDefaultGrid) {
  TempDir dir;
  ASSERT_EQ(run({"featurize", "--corpus", s(kCorpus), "--out", s(dir / "f.csv")}).code, 0);
  const Result r =
      run({"train", "--features", s(dir / "f.csv"), "--model", "KNN", "--grid", "on", "--out", s(dir / "m.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  ASSERT_TRUE(j.contains("grid_search"));
  EXPECT_EQ(j["grid_search"]["table"].size(), 3u);
}

TEST(Cli, DetectGivesLabelAndScore) {
  TempDir dir;
  ASSERT_EQ(run({"featurize", "--corpus", s(kCorpus), "--out", s(dir / "f.csv")}).code, 0);
  ASSERT_EQ(run({"train", "--features", s(dir / "f.csv"), "--model", "RF", "--train-fraction", "1", "--out",
                 s(dir / "m.json")})
                .code,
            0);
  const auto file = kCorpus / "ADS" / "ads01" / "chatgpt.py";
  const Result r = run({"detect", "--model", s(dir / "m.json"), s(file)});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  const double score = j["score"];
  EXPECT_GE(score, 0.0);
  EXPECT_LE(score, 1.0);
  EXPECT_EQ(j["label"], "CHATGPT");
}

TEST(Cli, ReliabilitySplitEmitsEighteenRows) {
  TempDir dir;
  ASSERT_EQ(run({"featurize", "--corpus", s(kCorpus), "--out", s(dir / "f.csv")}).code, 0);
  const Result r = run({"reliability", "--test", "split", "--features", s(dir / "f.csv"), "--model", "DT"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(line_count(r.out), 19u);  // header + 18 ratios
  EXPECT_TRUE(r.out.starts_with("train_fraction,"));
}

TEST(Cli, ReliabilityNoiseAndCategory) {
  TempDir dir;
  ASSERT_EQ(run({"featurize", "--corpus", s(kCorpus), "--out", s(dir / "f.csv")}).code, 0);
  const Result noise = run({"reliability", "--test", "noise", "--features", s(dir / "f.csv"), "--model", "GNB",
                            "--format", "json"});
  ASSERT_EQ(noise.code, 0) << noise.err;
  const json n = json::parse(noise.out);
  EXPECT_EQ(n["points"].size(), 21u);
  const Result cat =
      run({"reliability", "--test", "category", "--holdout", "--features", s(dir / "f.csv"), "--model", "DT"});
  ASSERT_EQ(cat.code, 0) << cat.err;
  EXPECT_EQ(line_count(cat.out), 6u);
}

TEST(Cli, ImportanceCsvListsAllFeatures) {
  TempDir dir;
  ASSERT_EQ(run({"featurize", "--corpus", s(kCorpus), "--out", s(dir / "f.csv")}).code, 0);
  const Result r =
      run({"importance", "--features", s(dir / "f.csv"), "--repeats", "3", "--n-trees", "10", "--seed", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(line_count(r.out), kNumFeatures + 1);
  EXPECT_EQ(r.out, run({"importance", "--features", s(dir / "f.csv"), "--repeats", "3", "--n-trees", "10", "--seed",
                        "2"})
                       .out);
}

TEST(Cli, GenerateWithoutTokenFailsEveryPrompt) {
  TempDir dir;
  write_text(dir / "m.csv", std::string(kManifestHeader) + "\np1,ADS,,write code,,\n");
  ::unsetenv("STYLO_CLI_TEST_UNSET_TOKEN");
  const Result r = run({"generate", "--manifest", s(dir / "m.csv"), "--corpus", s(dir / "out"), "--base-url",
                        "http://127.0.0.1:9", "--model-name", "m", "--token-env", "STYLO_CLI_TEST_UNSET_TOKEN",
                        "--retries", "0"});
  // Every prompt fails before any request is sent.
  EXPECT_EQ(r.code, cli::kIo);
  EXPECT_FALSE(std::filesystem::exists(dir / "out"));
}
