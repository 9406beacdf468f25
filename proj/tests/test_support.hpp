#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <string_view>

#include "stylo/corpus.hpp"
#include "stylo/matrix.hpp"

namespace stylo::testing {

/// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("stylo_test_" + std::to_string(rd()) + "_" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(std::string_view rel) const { return path_ / rel; }

 private:
  std::filesystem::path path_;
};

inline void write_text(const std::filesystem::path& p, std::string_view text) {
  std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  out << text;
}

inline std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Balanced dataset with random, duplicate-free features. Samples alternate
/// CHATGPT/HUMAN and cycle through the five categories.
inline Dataset random_dataset(std::size_t per_class, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> real(0.0, 500.0);
  std::uniform_int_distribution<int> count(0, 300);
  Dataset d;
  for (std::size_t i = 0; i < 2 * per_class; ++i) {
    Sample s;
    s.id = "p" + std::to_string(i / 2);
    s.author = i % 2 == 0 ? Author::ChatGpt : Author::Human;
    s.category = kCategories[(i / 2) % kCategories.size()];
    auto& m = s.features;
    m.cyclomatic_complexity = 1 + count(rng);
    m.halstead_difficulty = real(rng);
    m.halstead_effort = real(rng) * 100.0;
    m.halstead_volume = real(rng);
    m.halstead_time = m.halstead_effort / 18.0;
    m.halstead_bugs = m.halstead_volume / 3000.0;
    m.sloc = count(rng);
    m.lloc = count(rng);
    m.diff_sloc_lloc = m.sloc - m.lloc;
    m.n_lines = m.sloc + count(rng);
    m.n_comments = count(rng) % 40;
    m.n_functions = count(rng) % 12;
    m.n_classes = count(rng) % 4;
    m.maintainability_index = real(rng) / 5.0;
    d.samples.push_back(s);
  }
  return d;
}

/// Two Gaussian blobs in `cols` dimensions; class means differ by `gap` in
/// every column. Labels alternate CHATGPT/HUMAN.
inline void blobs(std::size_t n, std::size_t cols, double gap, std::uint64_t seed, Matrix& x,
                  Labels& y) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  x = Matrix(n, cols);
  y.assign(n, Author::ChatGpt);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = i % 2 == 0 ? Author::ChatGpt : Author::Human;
    for (std::size_t c = 0; c < cols; ++c) {
      x(i, c) = noise(rng) + (y[i] == Author::ChatGpt ? gap : 0.0);
    }
  }
}

/// Pure-noise features except column `signal`, whose sign decides the label.
inline void injected_feature(std::size_t n, std::size_t cols, std::size_t signal,
                             std::uint64_t seed, Matrix& x, Labels& y) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  x = Matrix(n, cols);
  y.assign(n, Author::ChatGpt);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < cols; ++c) x(i, c) = noise(rng);
    y[i] = x(i, signal) > 0.0 ? Author::ChatGpt : Author::Human;
  }
}

/// Wraps a 14-column matrix as a dataset with unique ids and cycling
/// categories.
inline Dataset to_dataset(const Matrix& x, const Labels& y) {
  Dataset d;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    Sample s;
    s.id = "r" + std::to_string(i);
    s.author = y[i];
    s.category = kCategories[i % kCategories.size()];
    s.features = MetricVector::from_array(x.row(i).first<kNumFeatures>());
    d.samples.push_back(s);
  }
  return d;
}

}  // namespace stylo::testing
