#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "stylo/learn.hpp"

namespace stylo {

/// Fold id per row. Each class is shuffled with its own derived seed and dealt
/// round-robin into `k` folds. Throws DegenerateSplit if a class has fewer
/// than `k` members.
std::vector<std::size_t> stratified_folds(const Labels& y, std::size_t k, std::uint64_t seed);

struct CvRow {
  HyperParams params;
  std::vector<double> fold_weighted_f1;
  double mean_weighted_f1 = 0.0;
  bool operator==(const CvRow&) const = default;
};

struct GridSearchResult {
  std::size_t best_index = 0;
  HyperParams best;
  std::vector<CvRow> table;
  bool operator==(const GridSearchResult&) const = default;
};

inline constexpr std::size_t kCvFolds = 5;

/// Cross-validated search; highest mean weighted F1 wins, earliest entry on
/// ties. Every entry is fitted with `seed`.
GridSearchResult grid_search(const Matrix& x, const Labels& y, ModelKind kind, const std::vector<HyperParams>& grid,
                             std::uint64_t seed, std::size_t folds = kCvFolds);

std::vector<HyperParams> default_grid(ModelKind kind);

nlohmann::json to_json(ModelKind kind, const GridSearchResult& result);

}  // namespace stylo
