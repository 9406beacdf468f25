#include "stylo/model_selection.hpp"

#include <nlohmann/json.hpp>

#include "stylo/evaluation.hpp"
#include "stylo/parallel.hpp"

namespace stylo {

std::vector<std::size_t> stratified_folds(const Labels& y, std::size_t k, std::uint64_t seed) {
  if (k < 2) throw UsageError("need at least 2 folds");
  std::vector<std::size_t> fold(y.size(), 0);
  for (Author a : kAuthors) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i] == a) members.push_back(i);
    }
    if (members.size() < k) {
      throw DegenerateSplit("class " + std::string(to_string(a)) + " has " + std::to_string(members.size()) +
                            " samples, fewer than " + std::to_string(k) + " folds");
    }
    Rng rng(derive_seed(seed, Stream::Fold, static_cast<std::uint64_t>(a)));
    rng.shuffle(std::span<std::size_t>(members));
    for (std::size_t j = 0; j < members.size(); ++j) fold[members[j]] = j % k;
  }
  return fold;
}

GridSearchResult grid_search(const Matrix& x, const Labels& y, ModelKind kind, const std::vector<HyperParams>& grid,
                             std::uint64_t seed, std::size_t folds) {
  if (grid.empty()) throw UsageError("empty hyperparameter grid");
  if (x.rows() != y.size()) throw LengthMismatch("feature rows and labels differ");
  const auto fold_of = stratified_folds(y, folds, seed);
  std::vector<std::vector<std::size_t>> train_idx(folds);
  std::vector<std::vector<std::size_t>> test_idx(folds);
  for (std::size_t i = 0; i < y.size(); ++i) {
    for (std::size_t f = 0; f < folds; ++f) (fold_of[i] == f ? test_idx[f] : train_idx[f]).push_back(i);
  }

  GridSearchResult result;
  result.table.resize(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    result.table[g].params = grid[g];
    result.table[g].params.seed = seed;
    result.table[g].fold_weighted_f1.assign(folds, 0.0);
  }
  parallel_for(grid.size() * folds, [&](std::size_t cell) {
    const std::size_t g = cell / folds;
    const std::size_t f = cell % folds;
    const Model m = fit(kind, x.select_rows(train_idx[f]), select_labels(y, train_idx[f]), result.table[g].params);
    const Prediction p = predict(m, x.select_rows(test_idx[f]));
    result.table[g].fold_weighted_f1[f] = evaluate(p.labels, select_labels(y, test_idx[f])).weighted_f1;
  });
  for (std::size_t g = 0; g < grid.size(); ++g) {
    auto& row = result.table[g];
    double sum = 0.0;
    for (double v : row.fold_weighted_f1) sum += v;
    row.mean_weighted_f1 = sum / static_cast<double>(folds);
    if (g == 0 || row.mean_weighted_f1 > result.table[result.best_index].mean_weighted_f1) result.best_index = g;
  }
  result.best = result.table[result.best_index].params;
  return result;
}

std::vector<HyperParams> default_grid(ModelKind kind) {
  const std::vector<std::optional<int>> depths = {3, 5, 8, std::nullopt};
  const std::vector<int> splits = {2, 5};
  std::vector<HyperParams> grid;
  switch (kind) {
    case ModelKind::DT:
      for (auto d : depths) {
        for (int s : splits) {
          HyperParams p;
          p.max_depth = d;
          p.min_samples_split = s;
          grid.push_back(p);
        }
      }
      break;
    case ModelKind::RF:
      for (int t : {50, 200}) {
        for (auto d : depths) {
          for (int s : splits) {
            HyperParams p;
            p.n_trees = t;
            p.max_depth = d;
            p.min_samples_split = s;
            grid.push_back(p);
          }
        }
      }
      break;
    case ModelKind::RUSBoost:
      for (int r : {25, 50}) {
        for (int b : {1, 2}) {
          HyperParams p;
          p.n_rounds = r;
          p.base_depth = b;
          grid.push_back(p);
        }
      }
      break;
    case ModelKind::GNB:
      grid.emplace_back();
      break;
    case ModelKind::KNN:
      for (int k : {3, 5, 7}) {
        HyperParams p;
        p.k = k;
        grid.push_back(p);
      }
      break;
  }
  return grid;
}

nlohmann::json to_json(ModelKind kind, const GridSearchResult& result) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : result.table) {
    rows.push_back({{"params", params_json(kind, row.params)},
                    {"fold_weighted_f1", row.fold_weighted_f1},
                    {"mean_weighted_f1", row.mean_weighted_f1}});
  }
  return {{"best_index", result.best_index}, {"best", params_json(kind, result.best)}, {"table", rows}};
}

}  // namespace stylo
