#include "stylo/metrics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>

namespace stylo {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Halstead, SpecExamples) {
  EXPECT_EQ(halstead_counts(tokenize("")), (HalsteadCounts{0, 0, 0, 0}));
  EXPECT_EQ(halstead_counts(tokenize("a = b + 1")), (HalsteadCounts{2, 3, 2, 3}));
  EXPECT_EQ(halstead_counts(tokenize("x = x")), (HalsteadCounts{1, 1, 1, 2}));
}

TEST(Halstead, ClosingBracketsAndLiteralKeywords) {
  const auto c = halstead_counts(tokenize("f(x, [None]) if not y else 0\n"));
  // operators: ( , [ if not else -> 6 distinct, 6 total
  EXPECT_EQ(c.distinct_operators, 6);
  EXPECT_EQ(c.total_operators, 6);
  // operands: f x None y 0
  EXPECT_EQ(c.distinct_operands, 5);
  EXPECT_EQ(c.total_operands, 5);
}

TEST(DeriveHalstead, EmptyCountsAreZero) {
  const auto h = derive_halstead({});
  EXPECT_EQ(h.volume, 0.0);
  EXPECT_EQ(h.difficulty, 0.0);
  EXPECT_EQ(h.effort, 0.0);
  EXPECT_EQ(h.time, 0.0);
  EXPECT_EQ(h.bugs, 0.0);
}

TEST(DeriveHalstead, ClosedForm) {
  const auto h = derive_halstead({2, 3, 2, 3});
  EXPECT_NEAR(h.volume, 11.60964047443681, 1e-12);
  EXPECT_DOUBLE_EQ(h.difficulty, 1.0);
  EXPECT_NEAR(h.effort, 11.60964047443681, 1e-12);
  EXPECT_NEAR(h.time, 0.6449800263576005, 1e-12);
  EXPECT_NEAR(h.bugs, 0.0038698801581456034, 1e-15);
}

TEST(DeriveHalstead, NoOperandsGuardsDivision) {
  const auto h = derive_halstead({3, 0, 4, 0});
  EXPECT_EQ(h.difficulty, 0.0);
  EXPECT_EQ(h.effort, 0.0);
  EXPECT_GT(h.volume, 0.0);
}

TEST(CyclomaticComplexity, SpecExamples) {
  EXPECT_EQ(cyclomatic_complexity(tokenize("a=1\nb=2\n")), 1);
  EXPECT_EQ(cyclomatic_complexity(tokenize("if a and b:\n    pass\n")), 3);
  EXPECT_EQ(cyclomatic_complexity(tokenize("")), 1);
}

TEST(CyclomaticComplexity, NonBranchingKeywordsAddNothing) {
  EXPECT_EQ(cyclomatic_complexity(tokenize(
                "try:\n  pass\nfinally:\n  pass\nwith a:\n  pass\ndef f(): pass\nclass C: pass\n")),
            1);
  EXPECT_EQ(cyclomatic_complexity(tokenize("y = [a for a in b if a or c]\n")), 4);
}

TEST(StructuralCounts, SpecExamples) {
  EXPECT_EQ(structural_counts("", tokenize("")), (StructuralCounts{0, 0, 0, 0, 0}));
  const std::string greet = "# greet\ndef greet(n):\n    if n:\n        print(n)\n";
  EXPECT_EQ(structural_counts(greet, tokenize(greet)), (StructuralCounts{4, 1, 3, 1, 0}));
  const std::string hashes = "x=1  # a  # b\n";
  EXPECT_EQ(structural_counts(hashes, tokenize(hashes)).n_comments, 1);
}

TEST(StructuralCounts, FunctionsAtStatementHeadOnly) {
  const std::string src =
      "async def a(): pass\n"
      "f = lambda: 0\n"
      "class K:\n"
      "    def m(self): return 'def'\n"
      "if x: def_count = 1\n";
  const auto s = structural_counts(src, tokenize(src));
  EXPECT_EQ(s.n_functions, 2);
  EXPECT_EQ(s.n_classes, 1);
}

TEST(MaintainabilityIndex, EmptyInputPlugIn) {
  EXPECT_NEAR(maintainability_index(0.0, 1, 0, 0.0), 100.0 * (171.0 - 0.23) / 171.0, 1e-12);
  EXPECT_NEAR(maintainability_index(0.0, 1, 0, 0.0), 99.86549707602339, 1e-9);
}

TEST(MaintainabilityIndex, ZeroRatioRemovesSineTerm) {
  const double v = 250.0;
  const double expected = 100.0 * (171.0 - 5.2 * std::log(v) - 0.23 * 7 - 16.2 * std::log(40.0)) / 171.0;
  EXPECT_DOUBLE_EQ(maintainability_index(v, 7, 40, 0.0), expected);
}

TEST(MaintainabilityIndex, AlwaysClamped) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> volume(0.0, 1e7);
  std::uniform_int_distribution<int> cc(1, 5000);
  std::uniform_int_distribution<int> sloc(0, 100000);
  std::uniform_real_distribution<double> ratio(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const double mi = maintainability_index(volume(rng), cc(rng), sloc(rng), ratio(rng));
    ASSERT_GE(mi, 0.0);
    ASSERT_LE(mi, 100.0);
  }
  EXPECT_EQ(maintainability_index(1e12, 100000, 1000000, 0.0), 0.0);
  EXPECT_EQ(maintainability_index(0.0, 1, 0, 1.0), 100.0);
}

TEST(ExtractMetrics, EmptyFile) {
  const MetricVector m = extract_metrics("");
  MetricVector expected;
  expected.cyclomatic_complexity = 1;
  expected.maintainability_index = maintainability_index(0.0, 1, 0, 0.0);
  EXPECT_EQ(m, expected);
}

TEST(ExtractMetrics, OneLineSuiteCountsTwoLogicalLines) {
  const MetricVector m = extract_metrics("if x: print(x)");
  EXPECT_EQ(m.sloc, 1);
  EXPECT_EQ(m.lloc, 2);
  EXPECT_EQ(m.diff_sloc_lloc, -1);
}

TEST(ExtractMetrics, PropagatesLexError) {
  EXPECT_THROW(extract_metrics("x = (1,\n"), LexError);
}

TEST(ExtractMetrics, ArrayRoundTrip) {
  const MetricVector m = extract_metrics("# c\ndef f(x):\n    return x * 2\n");
  const auto arr = m.to_array();
  EXPECT_EQ(MetricVector::from_array(arr), m);
}

// Frozen oracle values produced by tests/oracle/metrics_oracle.py.
class FixtureTest : public ::testing::TestWithParam<fs::path> {};

TEST_P(FixtureTest, MatchesOracle) {
  const fs::path py = GetParam();
  const auto expected = nlohmann::json::parse(slurp(fs::path(py).replace_extension(".json")));
  const std::string source = slurp(py);
  const auto tokens = tokenize(source);

  const auto counts = halstead_counts(tokens);
  const auto& hc = expected.at("halstead_counts");
  EXPECT_EQ(counts.distinct_operators, hc.at("n1").get<std::int64_t>());
  EXPECT_EQ(counts.distinct_operands, hc.at("n2").get<std::int64_t>());
  EXPECT_EQ(counts.total_operators, hc.at("N1").get<std::int64_t>());
  EXPECT_EQ(counts.total_operands, hc.at("N2").get<std::int64_t>());

  std::vector<std::string> classes;
  for (LineClass c : classify_lines(source)) classes.emplace_back(to_string(c));
  EXPECT_EQ(classes, expected.at("line_classes").get<std::vector<std::string>>());

  const auto values = extract_metrics(source).to_array();
  const auto& want = expected.at("metrics");
  for (std::size_t i = 0; i < kNumFeatures; ++i) {
    const std::string name(kFeatureNames[i]);
    if (is_integer_feature(i)) {
      EXPECT_EQ(static_cast<std::int64_t>(values[i]), want.at(name).get<std::int64_t>()) << name;
    } else {
      EXPECT_NEAR(values[i], want.at(name).get<double>(), 1e-9) << name;
    }
  }
}

std::vector<fs::path> fixture_files() {
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(fs::path(STYLO_FIXTURE_DIR) / "metrics")) {
    if (entry.path().extension() == ".py") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

INSTANTIATE_TEST_SUITE_P(Oracle, FixtureTest, ::testing::ValuesIn(fixture_files()),
                         [](const auto& info) {
                           std::string name = info.param.stem().string();
                           for (char& c : name) {
                             if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
                           }
                           return "f" + name;
                         });

// Invariants over every fixture body.

std::vector<std::string> fixture_sources() {
  std::vector<std::string> out;
  for (const auto& p : fixture_files()) out.push_back(slurp(p));
  return out;
}

std::string with_trailing_newline(std::string s) {
  if (!s.empty() && s.back() != '\n') s += '\n';
  return s;
}

TEST(MetricInvariants, BasicBounds) {
  for (const auto& src : fixture_sources()) {
    const MetricVector m = extract_metrics(src);
    EXPECT_LE(m.sloc, m.n_lines);
    EXPECT_LE(m.n_comments, m.n_lines);
    EXPECT_GE(m.cyclomatic_complexity, 1);
    EXPECT_EQ(m.diff_sloc_lloc, m.sloc - m.lloc);
    EXPECT_GE(m.maintainability_index, 0.0);
    EXPECT_LE(m.maintainability_index, 100.0);
  }
}

TEST(MetricInvariants, BlankLineChangesOnlyLineCountAndMi) {
  for (const auto& raw : fixture_sources()) {
    const std::string src = with_trailing_newline(raw);
    const auto a = extract_metrics(src).to_array();
    const auto b = extract_metrics(src + "\n").to_array();
    for (std::size_t i = 0; i < kNumFeatures; ++i) {
      if (kFeatureNames[i] == "n_lines") {
        EXPECT_EQ(b[i], a[i] + 1);
      } else if (kFeatureNames[i] != "maintainability_index") {
        EXPECT_EQ(b[i], a[i]) << kFeatureNames[i];
      }
    }
  }
}

TEST(MetricInvariants, CommentLineIncrementsLinesAndComments) {
  for (const auto& raw : fixture_sources()) {
    const std::string src = with_trailing_newline(raw);
    const auto before = extract_metrics(src);
    const auto after = extract_metrics(src + "# appended\n");
    EXPECT_EQ(after.n_lines, before.n_lines + 1);
    EXPECT_EQ(after.n_comments, before.n_comments + 1);
    EXPECT_EQ(after.sloc, before.sloc);
    EXPECT_EQ(after.lloc, before.lloc);
    EXPECT_EQ(after.cyclomatic_complexity, before.cyclomatic_complexity);
    EXPECT_EQ(halstead_counts(tokenize(src)), halstead_counts(tokenize(src + "# appended\n")));
  }
}

TEST(MetricInvariants, DuplicatedBodyDoublesTotals) {
  for (const auto& raw : fixture_sources()) {
    const std::string src = with_trailing_newline(raw);
    const std::string twice = src + src;
    const auto one = halstead_counts(tokenize(src));
    const auto two = halstead_counts(tokenize(twice));
    EXPECT_EQ(two.total_operators, 2 * one.total_operators);
    EXPECT_EQ(two.total_operands, 2 * one.total_operands);
    EXPECT_LE(two.distinct_operators, 2 * one.distinct_operators);
    EXPECT_LE(two.distinct_operands, 2 * one.distinct_operands);
    const auto m1 = extract_metrics(src);
    const auto m2 = extract_metrics(twice);
    EXPECT_EQ(m2.sloc, 2 * m1.sloc);
    EXPECT_EQ(m2.lloc, 2 * m1.lloc);
    EXPECT_EQ(m2.n_comments, 2 * m1.n_comments);
  }
}

TEST(MetricInvariants, Deterministic) {
  for (const auto& src : fixture_sources()) {
    EXPECT_EQ(extract_metrics(src), extract_metrics(std::string(src)));
  }
}

}  // namespace
}  // namespace stylo
