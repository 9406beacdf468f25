#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "stylo/matrix.hpp"
#include "stylo/tree.hpp"

namespace stylo {

enum class ModelKind { DT, RF, RUSBoost, GNB, KNN };

inline constexpr std::array<ModelKind, 5> kModelKinds = {ModelKind::DT, ModelKind::RF, ModelKind::RUSBoost,
                                                          ModelKind::GNB, ModelKind::KNN};

/// "DT", "RF", "RUSBOOST", "GNB", "KNN".
std::string_view to_string(ModelKind k);
std::optional<ModelKind> parse_model_kind(std::string_view text);

/// Union of every model's hyperparameters; each kind reads the ones it uses.
struct HyperParams {
  std::optional<int> max_depth;  // DT, RF; nullopt = unlimited
  int min_samples_split = 2;     // DT, RF
  int n_trees = 100;             // RF
  std::size_t max_features = 0;  // RF; 0 = ceil(sqrt(width))
  bool bootstrap = true;         // RF
  int n_rounds = 50;             // RUSBOOST
  int base_depth = 1;            // RUSBOOST
  int k = 5;                     // KNN
  std::uint64_t seed = 0;        // RF, RUSBOOST

  bool operator==(const HyperParams&) const = default;
};

struct ForestPayload {
  std::vector<DecisionTree> trees;
  bool operator==(const ForestPayload&) const = default;
};

struct BoostPayload {
  std::vector<DecisionTree> learners;
  std::vector<double> alphas;
  bool operator==(const BoostPayload&) const = default;
};

struct GnbPayload {
  std::array<std::vector<double>, 2> means;      // indexed by Author
  std::array<std::vector<double>, 2> variances;  // floored
  std::array<double, 2> priors{};
  bool operator==(const GnbPayload&) const = default;
};

struct KnnPayload {
  int k = 1;
  std::vector<double> means;
  std::vector<double> stds;  // 0 marks a constant column, dropped from distances
  Matrix train;              // z-scored training rows
  Labels labels;
  bool operator==(const KnnPayload&) const = default;
};

using ModelPayload = std::variant<DecisionTree, ForestPayload, BoostPayload, GnbPayload, KnnPayload>;

/// A fitted classifier. Immutable once constructed.
class Model {
 public:
  Model(ModelKind kind, HyperParams params, std::vector<std::string> feature_names, ModelPayload learned);

  ModelKind kind() const noexcept { return kind_; }
  const HyperParams& params() const noexcept { return params_; }
  const std::vector<std::string>& feature_names() const noexcept { return feature_names_; }
  std::size_t n_features() const noexcept { return feature_names_.size(); }
  const ModelPayload& learned() const noexcept { return learned_; }

  bool operator==(const Model&) const = default;

 private:
  ModelKind kind_;
  HyperParams params_;
  std::vector<std::string> feature_names_;
  ModelPayload learned_;
};

Model fit_decision_tree(const Matrix& x, const Labels& y, const HyperParams& params);
Model fit_random_forest(const Matrix& x, const Labels& y, const HyperParams& params);
Model fit_rusboost(const Matrix& x, const Labels& y, const HyperParams& params);
Model fit_gnb(const Matrix& x, const Labels& y);
Model fit_knn(const Matrix& x, const Labels& y, const HyperParams& params);
Model fit(ModelKind kind, const Matrix& x, const Labels& y, const HyperParams& params);

/// Weight of a boosting round with weighted error `error` in (0, 0.5).
double boosting_alpha(double error);

struct Prediction {
  Labels labels;
  std::vector<double> scores;  // CHATGPT score in [0, 1]
};

Prediction predict(const Model& model, const Matrix& x);

/// GNB class posteriors for one row, indexed by Author.
std::array<double, 2> gnb_posteriors(const Model& model, std::span<const double> row);

/// The hyperparameters `kind` reads, as a JSON object.
nlohmann::json params_json(ModelKind kind, const HyperParams& params);

/// Versioned JSON document {schema, kind, params, feature_names, learned}.
std::string serialize_model(const Model& model);
Model parse_model(std::string_view text);
void save_model(const Model& model, const std::filesystem::path& path);
Model load_model(const std::filesystem::path& path);

inline constexpr std::string_view kModelSchema = "stylo.model/1";

}  // namespace stylo
