#include "stylo/corpus.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "stylo/io.hpp"
#include "test_support.hpp"

namespace stylo {
namespace {

using testing::TempDir;
using testing::write_text;

void make_prompt(const TempDir& root, std::string_view cat, std::string_view id,
                 std::string_view chatgpt, std::string_view human) {
  const auto dir = root.path() / cat / id;
  write_text(dir / "chatgpt.py", chatgpt);
  write_text(dir / "human.py", human);
}

TEST(Ingest, TwoPromptsTwoAuthors) {
  TempDir root;
  make_prompt(root, "DA", "p2", "# c\nx = 1\n", "x=1\n");
  make_prompt(root, "ADS", "p1", "def f():\n    return 1\n", "y = 2\n");
  const auto result = ingest_corpus(root.path());
  EXPECT_TRUE(result.diagnostics.empty());
  ASSERT_EQ(result.dataset.size(), 4u);
  const auto& s = result.dataset.samples;
  EXPECT_EQ(s[0].category, Category::ADS);
  EXPECT_EQ(s[0].id, "p1");
  EXPECT_EQ(s[0].author, Author::ChatGpt);
  EXPECT_EQ(s[0].features.n_functions, 1);
  EXPECT_EQ(s[1].author, Author::Human);
  EXPECT_EQ(s[2].category, Category::DA);
  EXPECT_EQ(s[2].features.n_comments, 1);
}

TEST(Ingest, LexFailureBecomesDiagnostic) {
  TempDir root;
  make_prompt(root, "M", "p1", "x = 1\n", "y = 2\n");
  make_prompt(root, "M", "p2", "z = 3\n", "w = 'oops\n");
  const auto result = ingest_corpus(root.path());
  EXPECT_EQ(result.dataset.size(), 3u);
  ASSERT_EQ(result.diagnostics.size(), 1u);
  EXPECT_EQ(result.diagnostics[0].line, 1);
  EXPECT_NE(result.diagnostics[0].path.find("human.py"), std::string::npos);
}

TEST(Ingest, EmptyRootThrows) {
  TempDir root;
  EXPECT_THROW(ingest_corpus(root.path()), EmptyCorpus);
}

TEST(Ingest, AllFilesUnlexableIsEmpty) {
  TempDir root;
  make_prompt(root, "OO", "p1", "(", ")");
  EXPECT_THROW(ingest_corpus(root.path()), EmptyCorpus);
}

TEST(Ingest, UnknownCategoryThrows) {
  TempDir root;
  make_prompt(root, "ADS", "p1", "x = 1\n", "y = 2\n");
  make_prompt(root, "GAMES", "p2", "x = 1\n", "y = 2\n");
  EXPECT_THROW(ingest_corpus(root.path()), UnknownCategory);
}

TEST(Ingest, MissingRootIsIoError) {
  EXPECT_THROW(ingest_corpus("/nonexistent/stylo/corpus"), IoError);
}

TEST(Ingest, IgnoresStrayFilesAndPartialPrompts) {
  TempDir root;
  make_prompt(root, "VGD", "p1", "x = 1\n", "y = 2\n");
  write_text(root / "README.md", "notes");
  write_text(root / "VGD" / "p2" / "chatgpt.py", "z = 1\n");
  write_text(root / "VGD" / "p2" / "notes.txt", "ignored");
  const auto result = ingest_corpus(root.path());
  EXPECT_EQ(result.dataset.size(), 3u);
}

TEST(Ingest, OrderIndependent) {
  TempDir a;
  TempDir b;
  const std::vector<std::pair<std::string, std::string>> prompts = {
      {"ADS", "zeta"}, {"DA", "alpha"}, {"ADS", "beta"}, {"OO", "mid"}, {"M", "a1"}};
  for (const auto& [cat, id] : prompts) make_prompt(a, cat, id, "x = '" + id + "'\n", "# h\ny = 1\n");
  for (auto it = prompts.rbegin(); it != prompts.rend(); ++it) {
    make_prompt(b, it->first, it->second, "x = '" + it->second + "'\n", "# h\ny = 1\n");
  }
  EXPECT_EQ(ingest_corpus(a.path()).dataset, ingest_corpus(b.path()).dataset);
}

TEST(Features, RoundTripIsIdentity) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Dataset d = testing::random_dataset(7 + seed, seed);
    d.samples[0].id = "needs, \"quoting\"\nhere";
    d.samples[1].features.halstead_effort = 0.1 + 0.2;
    d.samples[2].features.maintainability_index = 1e-300;
    EXPECT_EQ(parse_features(format_features(d)), d);
  }
}

TEST(Features, FileRoundTrip) {
  TempDir dir;
  const Dataset d = testing::random_dataset(5, 42);
  write_features(d, dir / "sub" / "features.csv");
  EXPECT_EQ(read_features(dir / "sub" / "features.csv"), d);
}

TEST(Features, HeaderIsBitExact) {
  const std::string text = format_features({});
  EXPECT_EQ(text,
            "id,author,category,cyclomatic_complexity,halstead_difficulty,halstead_effort,"
            "halstead_volume,halstead_time,halstead_bugs,sloc,lloc,diff_sloc_lloc,n_lines,"
            "n_comments,n_functions,n_classes,maintainability_index\n");
}

TEST(Features, PermutedHeaderIsSchemaMismatch) {
  std::string text = format_features(testing::random_dataset(2, 1));
  const auto pos = text.find("sloc,lloc");
  text.replace(pos, 9, "lloc,sloc");
  EXPECT_THROW(parse_features(text), SchemaMismatch);
}

TEST(Features, MalformedRowsAreSchemaMismatch) {
  const std::string header = format_features({});
  EXPECT_THROW(parse_features(header + "a,CHATGPT,ADS,1\n"), SchemaMismatch);
  EXPECT_THROW(parse_features(header + "a,ROBOT,ADS,1,0,0,0,0,0,0,0,0,0,0,0,0,0\n"), SchemaMismatch);
  EXPECT_THROW(parse_features(header + "a,HUMAN,XX,1,0,0,0,0,0,0,0,0,0,0,0,0,0\n"), SchemaMismatch);
  EXPECT_THROW(parse_features(header + "a,HUMAN,DA,1.5,0,0,0,0,0,0,0,0,0,0,0,0,0\n"), SchemaMismatch);
  EXPECT_THROW(parse_features(header + "a,HUMAN,DA,1,x,0,0,0,0,0,0,0,0,0,0,0,0\n"), SchemaMismatch);
  EXPECT_THROW(parse_features(""), SchemaMismatch);
  const std::string row = "a,HUMAN,DA,1,0,0,0,0,0,0,0,0,0,0,0,0,0\n";
  EXPECT_EQ(parse_features(header + row).size(), 1u);
  EXPECT_THROW(parse_features(header + row + row), SchemaMismatch);
}

TEST(Features, LineCountIsHeaderPlusRows) {
  const std::string text = format_features(testing::random_dataset(131, 9));
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 263);
}

TEST(TrainCount, RoundsHalfUp) {
  EXPECT_EQ(train_count(131, 0.8), 105u);
  EXPECT_EQ(train_count(10, 0.45), 5u);
  EXPECT_EQ(train_count(10, 0.44), 4u);
  EXPECT_EQ(train_count(3, 0.5), 2u);
  EXPECT_EQ(train_count(2, 0.5), 1u);
}

TEST(StratifiedSplit, BalancedCorpusGives210And52) {
  const Dataset d = testing::random_dataset(131, 3);
  const Split s = stratified_split(d, {0.8, 0});
  EXPECT_EQ(s.train.size(), 210u);
  EXPECT_EQ(s.test.size(), 52u);
  EXPECT_EQ(s.train.count(Author::ChatGpt), 105u);
  EXPECT_EQ(s.train.count(Author::Human), 105u);
  EXPECT_EQ(s.test.count(Author::ChatGpt), 26u);
  EXPECT_EQ(s.test.count(Author::Human), 26u);
}

TEST(StratifiedSplit, HalfOfFour) {
  const Dataset d = testing::random_dataset(2, 5);
  const Split s = stratified_split(d, {0.5, 11});
  EXPECT_EQ(s.train.size(), 2u);
  EXPECT_EQ(s.test.size(), 2u);
}

TEST(StratifiedSplit, DeterministicPerSeed) {
  const Dataset d = testing::random_dataset(40, 8);
  const Split a = stratified_split(d, {0.7, 99});
  const Split b = stratified_split(d, {0.7, 99});
  const Split c = stratified_split(d, {0.7, 100});
  EXPECT_EQ(a.train_indices, b.train_indices);
  EXPECT_EQ(a.train, b.train);
  EXPECT_NE(a.train_indices, c.train_indices);
}

TEST(StratifiedSplit, DegenerateSides) {
  const Dataset d = testing::random_dataset(1, 5);
  EXPECT_THROW(stratified_split(d, {0.5, 0}), DegenerateSplit);
  const Dataset e = testing::random_dataset(10, 5);
  EXPECT_THROW(stratified_split(e, {0.01, 0}), DegenerateSplit);
  EXPECT_THROW(stratified_split(e, {0.99, 0}), DegenerateSplit);
  EXPECT_THROW(stratified_split(e, {1.0, 0}), DegenerateSplit);
  EXPECT_THROW(stratified_split(e, {0.0, 0}), DegenerateSplit);
}

TEST(StratifiedSplit, PartitionAndStratificationProperty) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    Dataset d = testing::random_dataset(4 + rng() % 60, rng());
    // unbalance the classes by dropping some humans
    const std::size_t drop = rng() % 3;
    for (std::size_t k = 0; k < drop; ++k) d.samples.erase(d.samples.begin() + 1 + 2 * static_cast<std::ptrdiff_t>(k));
    const double fraction = 0.2 + 0.6 * static_cast<double>(rng() % 1000) / 1000.0;
    const Split s = stratified_split(d, {fraction, rng()});

    std::vector<std::size_t> all = s.train_indices;
    all.insert(all.end(), s.test_indices.begin(), s.test_indices.end());
    std::sort(all.begin(), all.end());
    ASSERT_EQ(all.size(), d.size());
    for (std::size_t i = 0; i < all.size(); ++i) ASSERT_EQ(all[i], i);

    for (Author a : kAuthors) {
      const double n_class = static_cast<double>(d.count(a));
      const double train_frac = static_cast<double>(s.train.count(a)) / static_cast<double>(s.train.size());
      const double data_frac = n_class / static_cast<double>(d.size());
      EXPECT_LE(std::abs(train_frac - data_frac), 1.0 / n_class);
      EXPECT_EQ(s.train.count(a), train_count(d.count(a), fraction));
    }
  }
}

}  // namespace
}  // namespace stylo
