#include "stylo/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <tuple>

#include "stylo/csv.hpp"
#include "stylo/io.hpp"
#include "stylo/parallel.hpp"
#include "stylo/random.hpp"

namespace stylo {

namespace fs = std::filesystem;

namespace {

bool hidden(const fs::path& p) {
  const std::string name = p.filename().string();
  return !name.empty() && name.front() == '.';
}

std::vector<std::string> header_row() {
  std::vector<std::string> h = {"id", "author", "category"};
  for (auto name : kFeatureNames) h.emplace_back(name);
  return h;
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || text.empty()) {
    throw SchemaMismatch("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::size_t Dataset::count(Author a) const {
  return static_cast<std::size_t>(
      std::count_if(samples.begin(), samples.end(), [a](const Sample& s) { return s.author == a; }));
}

Matrix Dataset::features() const {
  Matrix x(samples.size(), kNumFeatures);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto values = samples[i].features.to_array();
    std::copy(values.begin(), values.end(), x.row(i).begin());
  }
  return x;
}

Labels Dataset::labels() const {
  Labels y;
  y.reserve(samples.size());
  for (const auto& s : samples) y.push_back(s.author);
  return y;
}

void Dataset::validate() const {
  std::set<std::pair<std::string, Author>> seen;
  for (const auto& s : samples) {
    if (!seen.emplace(s.id, s.author).second) {
      throw SchemaMismatch("duplicate sample (" + s.id + ", " + std::string(to_string(s.author)) + ")");
    }
  }
}

IngestResult ingest_corpus(const fs::path& root) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) throw IoError("corpus root is not a directory: " + root.string());

  struct Job {
    Category category;
    std::string id;
    Author author;
    fs::path path;
  };
  std::vector<Job> jobs;
  for (const auto& cat_entry : fs::directory_iterator(root)) {
    if (!cat_entry.is_directory() || hidden(cat_entry.path())) continue;
    const std::string cat_name = cat_entry.path().filename().string();
    const auto category = parse_category(cat_name);
    if (!category) throw UnknownCategory("unknown category directory '" + cat_name + "'");
    for (const auto& prompt_entry : fs::directory_iterator(cat_entry.path())) {
      if (!prompt_entry.is_directory() || hidden(prompt_entry.path())) continue;
      const std::string id = prompt_entry.path().filename().string();
      for (Author author : kAuthors) {
        const fs::path file =
            prompt_entry.path() / (author == Author::ChatGpt ? kChatGptFile : kHumanFile);
        if (fs::is_regular_file(file, ec)) jobs.push_back({*category, id, author, file});
      }
    }
  }
  std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) {
    return std::tie(a.category, a.id, a.author) < std::tie(b.category, b.id, b.author);
  });

  struct Outcome {
    std::optional<MetricVector> metrics;
    Diagnostic diagnostic;
  };
  std::vector<Outcome> outcomes(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    const Job& job = jobs[i];
    const std::string source = read_file(job.path);
    try {
      outcomes[i].metrics = extract_metrics(source);
    } catch (const LexError& e) {
      outcomes[i].diagnostic = {job.path.string(), e.line(), e.what()};
    }
  });

  IngestResult result;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (outcomes[i].metrics) {
      result.dataset.samples.push_back({jobs[i].id, jobs[i].author, jobs[i].category, *outcomes[i].metrics});
    } else {
      result.diagnostics.push_back(std::move(outcomes[i].diagnostic));
    }
  }
  if (result.dataset.empty()) throw EmptyCorpus("no sample could be ingested from " + root.string());
  result.dataset.validate();
  return result;
}

std::string format_features(const Dataset& dataset) {
  std::string out = csv::format_row(header_row());
  for (const auto& s : dataset.samples) {
    csv::Row row = {s.id, std::string(to_string(s.author)), std::string(to_string(s.category))};
    const auto values = s.features.to_array();
    for (std::size_t i = 0; i < kNumFeatures; ++i) {
      row.push_back(is_integer_feature(i) ? std::to_string(static_cast<std::int64_t>(values[i]))
                                          : format_double(values[i]));
    }
    out += csv::format_row(row);
  }
  return out;
}

Dataset parse_features(std::string_view text) {
  const auto rows = csv::parse(text);
  if (rows.empty() || rows.front() != header_row()) {
    throw SchemaMismatch("features header does not match the canonical schema");
  }
  Dataset d;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != 3 + kNumFeatures) {
      throw SchemaMismatch("row " + std::to_string(r + 1) + ": expected " +
                           std::to_string(3 + kNumFeatures) + " fields");
    }
    Sample s;
    s.id = row[0];
    const auto author = parse_author(row[1]);
    const auto category = parse_category(row[2]);
    if (!author) throw SchemaMismatch("row " + std::to_string(r + 1) + ": bad author '" + row[1] + "'");
    if (!category) throw SchemaMismatch("row " + std::to_string(r + 1) + ": bad category '" + row[2] + "'");
    s.author = *author;
    s.category = *category;
    std::array<double, kNumFeatures> values{};
    for (std::size_t i = 0; i < kNumFeatures; ++i) {
      values[i] = is_integer_feature(i) ? static_cast<double>(parse_int(row[3 + i]))
                                        : parse_double(row[3 + i]);
    }
    s.features = MetricVector::from_array(values);
    d.samples.push_back(std::move(s));
  }
  d.validate();
  return d;
}

void write_features(const Dataset& dataset, const fs::path& path) {
  write_file_atomic(path, format_features(dataset));
}

Dataset read_features(const fs::path& path) { return parse_features(read_file(path)); }

std::size_t train_count(std::size_t n_class, double fraction) {
  // The epsilon absorbs representation error in fractions like 0.45.
  return static_cast<std::size_t>(std::floor(static_cast<double>(n_class) * fraction + 0.5 + 1e-9));
}

Split stratified_split(const Dataset& dataset, const SplitSpec& spec) {
  if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0)) {
    throw DegenerateSplit("train fraction must lie strictly between 0 and 1");
  }
  Split split;
  for (std::size_t c = 0; c < kAuthors.size(); ++c) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < dataset.size(); ++i) {
      if (dataset.samples[i].author == kAuthors[c]) members.push_back(i);
    }
    const std::size_t n_train = train_count(members.size(), spec.train_fraction);
    if (n_train == 0 || n_train >= members.size()) {
      throw DegenerateSplit("class " + std::string(to_string(kAuthors[c])) + " with " +
                            std::to_string(members.size()) + " samples cannot be split at " +
                            format_double(spec.train_fraction));
    }
    Rng rng(derive_seed(spec.seed, Stream::Split, c));
    rng.shuffle(std::span(members));
    split.train_indices.insert(split.train_indices.end(), members.begin(), members.begin() + static_cast<std::ptrdiff_t>(n_train));
    split.test_indices.insert(split.test_indices.end(), members.begin() + static_cast<std::ptrdiff_t>(n_train), members.end());
  }
  std::sort(split.train_indices.begin(), split.train_indices.end());
  std::sort(split.test_indices.begin(), split.test_indices.end());
  for (std::size_t i : split.train_indices) split.train.samples.push_back(dataset.samples[i]);
  for (std::size_t i : split.test_indices) split.test.samples.push_back(dataset.samples[i]);
  return split;
}

}  // namespace stylo
