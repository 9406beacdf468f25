#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "stylo/corpus.hpp"
#include "stylo/evaluation.hpp"
#include "stylo/learn.hpp"
#include "stylo/random.hpp"

namespace stylo {

enum class SweepKind { TrainFraction, NoiseSigma };

std::string_view to_string(SweepKind k);

struct SweepPoint {
  double x = 0.0;
  EvalReport report;  // pooled over runs (confusion matrices summed)
  double mean_accuracy = 0.0;
  double mean_weighted_f1 = 0.0;
  std::size_t runs = 0;
  bool operator==(const SweepPoint&) const = default;
};

struct SweepCurve {
  SweepKind kind = SweepKind::TrainFraction;
  std::vector<SweepPoint> points;
  bool operator==(const SweepCurve&) const = default;
};

/// 0.10, 0.15, ..., 0.95.
std::vector<double> split_ratios();

/// At each ratio and seed: stratified split with that seed, fit with that
/// seed, evaluate on the held-out side.
SweepCurve split_ratio_sweep(const Dataset& data, ModelKind kind, const HyperParams& params,
                             std::span<const std::uint64_t> seeds);

/// One report per category present in `test`.
std::map<Category, EvalReport> per_category_eval(const Model& model, const Dataset& test);

/// Trains on four categories and tests on the fifth, for each category that
/// has samples.
std::map<Category, EvalReport> category_holdout(const Dataset& data, ModelKind kind, const HyperParams& params);

struct FeatureStats {
  std::vector<double> mean;
  std::vector<double> std;  // population
};

FeatureStats feature_stats(const Matrix& x);

/// x + N(0, (sigma * stats.std[f])^2) per cell, drawn row-major from `rng`.
Matrix add_gaussian_noise(const Matrix& x, const FeatureStats& stats, double sigma, Rng& rng);

/// 0.0, 0.1, ..., 2.0.
std::vector<double> default_sigmas();

/// Adds N(0, (sigma * train_std[f])^2) to every test cell; noise for sigma
/// index j is drawn from derive_seed(seed, Noise, j). Sigmas must be
/// nonnegative and strictly ascending.
SweepCurve gaussian_noise_sweep(const Model& model, const FeatureStats& train, const Matrix& x_test,
                                const Labels& y_test, std::span<const double> sigmas, std::uint64_t seed);

/// Clamps negatives to 0 and scales to sum 1; an all-zero vector stays zero.
std::vector<double> normalize_importance(std::vector<double> v);

/// Mean-over-trees impurity decrease, normalized. Throws WrongModelKind.
std::vector<double> impurity_importance(const Model& rf);

/// Baseline weighted F1 minus the mean weighted F1 with one column permuted,
/// per feature. Permutation r of feature f uses
/// derive_seed(seed, Permutation, f * repeats + r).
std::vector<double> permutation_drops(const Model& model, const Matrix& x, const Labels& y, int repeats,
                                      std::uint64_t seed);

std::vector<double> permutation_importance(const Model& model, const Matrix& x, const Labels& y, int repeats,
                                           std::uint64_t seed);

struct ImportanceRow {
  std::string feature;
  double impurity = 0.0;
  double permutation = 0.0;
  double mean = 0.0;
  bool operator==(const ImportanceRow&) const = default;
};

/// Rows sorted by mean importance, descending; ties keep feature order.
struct ImportanceReport {
  std::vector<ImportanceRow> rows;
  bool operator==(const ImportanceReport&) const = default;
};

ImportanceReport combined_importance(std::span<const double> impurity, std::span<const double> permutation,
                                     std::span<const std::string> names);

struct DualImportanceOptions {
  int iterations = 1000;
  int permutation_repeats = 1;
  double train_fraction = 0.8;
  HyperParams forest;  // seed is replaced per iteration
  std::uint64_t seed = 0;
};

/// Splits once, then per iteration i refits the forest with
/// derive_seed(seed, Importance, i) and measures both importances on the test
/// side. Per-iteration vectors are averaged and renormalized.
ImportanceReport dual_importance(const Dataset& data, const DualImportanceOptions& options);

nlohmann::json to_json(const SweepCurve& curve);
std::string to_csv(const SweepCurve& curve);
nlohmann::json to_json(const std::map<Category, EvalReport>& reports);
std::string to_csv(const std::map<Category, EvalReport>& reports);
nlohmann::json to_json(const ImportanceReport& report);
std::string to_csv(const ImportanceReport& report);

}  // namespace stylo
