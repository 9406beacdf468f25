#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "stylo/common.hpp"
#include "stylo/lexer.hpp"

namespace stylo {

struct HalsteadCounts {
  std::int64_t distinct_operators = 0;  // n1
  std::int64_t distinct_operands = 0;   // n2
  std::int64_t total_operators = 0;     // N1
  std::int64_t total_operands = 0;      // N2

  bool operator==(const HalsteadCounts&) const = default;
};

struct HalsteadMeasures {
  double volume = 0.0;      // bits
  double difficulty = 0.0;
  double effort = 0.0;
  double time = 0.0;        // seconds
  double bugs = 0.0;
};

struct StructuralCounts {
  std::int64_t n_lines = 0;
  std::int64_t n_comments = 0;
  std::int64_t sloc = 0;
  std::int64_t n_functions = 0;
  std::int64_t n_classes = 0;

  bool operator==(const StructuralCounts&) const = default;
};

/// The 14 per-file measurements, declared in canonical feature order.
struct MetricVector {
  std::int64_t cyclomatic_complexity = 0;
  double halstead_difficulty = 0.0;
  double halstead_effort = 0.0;
  double halstead_volume = 0.0;
  double halstead_time = 0.0;
  double halstead_bugs = 0.0;
  std::int64_t sloc = 0;
  std::int64_t lloc = 0;
  std::int64_t diff_sloc_lloc = 0;
  std::int64_t n_lines = 0;
  std::int64_t n_comments = 0;
  std::int64_t n_functions = 0;
  std::int64_t n_classes = 0;
  double maintainability_index = 0.0;

  bool operator==(const MetricVector&) const = default;

  std::array<double, kNumFeatures> to_array() const;
  static MetricVector from_array(std::span<const double, kNumFeatures> values);
};

/// Whether feature `index` holds an integer count.
bool is_integer_feature(std::size_t index);

std::int64_t cyclomatic_complexity(std::span<const Token> tokens);
HalsteadCounts halstead_counts(std::span<const Token> tokens);
HalsteadMeasures derive_halstead(const HalsteadCounts& counts);
StructuralCounts structural_counts(std::string_view source, std::span<const Token> tokens);

/// Comment-aware maintainability index clamped to [0, 100].
double maintainability_index(double volume, std::int64_t total_cc, std::int64_t sloc,
                             double comment_ratio);

/// Tokenizes and measures one file. Propagates LexError.
MetricVector extract_metrics(std::string_view source);

}  // namespace stylo
