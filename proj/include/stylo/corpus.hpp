#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "stylo/common.hpp"
#include "stylo/matrix.hpp"
#include "stylo/metrics.hpp"

namespace stylo {

struct Sample {
  std::string id;
  Author author = Author::ChatGpt;
  Category category = Category::ADS;
  MetricVector features;

  bool operator==(const Sample&) const = default;
};

/// Labeled samples sharing the canonical feature order (kFeatureNames).
struct Dataset {
  std::vector<Sample> samples;

  std::size_t size() const noexcept { return samples.size(); }
  bool empty() const noexcept { return samples.empty(); }
  std::size_t count(Author a) const;

  Matrix features() const;
  Labels labels() const;

  /// Throws SchemaMismatch on a duplicate (id, author) pair.
  void validate() const;

  bool operator==(const Dataset&) const = default;
};

struct Diagnostic {
  std::string path;
  int line = 0;
  std::string message;
};

struct IngestResult {
  Dataset dataset;
  std::vector<Diagnostic> diagnostics;
};

/// File names that carry the author label inside a prompt directory.
inline constexpr std::string_view kChatGptFile = "chatgpt.py";
inline constexpr std::string_view kHumanFile = "human.py";

/// Reads `<root>/<category>/<prompt-id>/{chatgpt.py,human.py}`. Files that
/// fail to lex become diagnostics and are left out. Samples come back sorted
/// by (category, id, author).
/// Throws EmptyCorpus, UnknownCategory, IoError.
IngestResult ingest_corpus(const std::filesystem::path& root);

/// Features file: header `id,author,category,` + the 14 canonical names.
std::string format_features(const Dataset& dataset);
Dataset parse_features(std::string_view text);
void write_features(const Dataset& dataset, const std::filesystem::path& path);
Dataset read_features(const std::filesystem::path& path);

struct SplitSpec {
  double train_fraction = 0.8;
  std::uint64_t seed = 0;
};

struct Split {
  Dataset train;
  Dataset test;
  std::vector<std::size_t> train_indices;  // into the input dataset, ascending
  std::vector<std::size_t> test_indices;
};

/// Per-class training size: n_class * fraction rounded half up.
std::size_t train_count(std::size_t n_class, double fraction);

/// Author-stratified split. Each class is shuffled with its own derived seed;
/// both sides keep the input's sample order. Throws DegenerateSplit.
Split stratified_split(const Dataset& dataset, const SplitSpec& spec);

}  // namespace stylo
