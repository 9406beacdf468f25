#include "stylo/learn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include <nlohmann/json.hpp>

#include "stylo/io.hpp"
#include "stylo/parallel.hpp"

namespace stylo {

using nlohmann::json;

namespace {

constexpr std::size_t idx(Author a) { return static_cast<std::size_t>(a); }

void check_training_input(const Matrix& x, const Labels& y) {
  if (x.rows() != y.size()) {
    throw LengthMismatch("feature rows (" + std::to_string(x.rows()) + ") and labels (" +
                         std::to_string(y.size()) + ") differ");
  }
  if (x.rows() < 2) throw DegenerateInput("need at least 2 training samples");
  const auto chatgpt = std::count(y.begin(), y.end(), Author::ChatGpt);
  if (chatgpt == 0 || chatgpt == static_cast<std::ptrdiff_t>(y.size())) {
    throw DegenerateInput("training labels contain a single class");
  }
}

std::vector<std::string> names_for(std::size_t width) {
  std::vector<std::string> out;
  if (width == kNumFeatures) {
    for (auto n : kFeatureNames) out.emplace_back(n);
  } else {
    for (std::size_t i = 0; i < width; ++i) out.push_back("f" + std::to_string(i));
  }
  return out;
}

std::vector<std::size_t> all_rows(std::size_t n) {
  std::vector<std::size_t> rows(n);
  std::iota(rows.begin(), rows.end(), 0);
  return rows;
}

Author vote(double chatgpt_fraction) { return chatgpt_fraction >= 0.5 ? Author::ChatGpt : Author::Human; }

std::array<double, 2> gnb_log_joint(const GnbPayload& g, std::span<const double> row) {
  std::array<double, 2> out{};
  for (Author a : kAuthors) {
    const auto c = idx(a);
    double s = std::log(g.priors[c]);
    for (std::size_t f = 0; f < row.size(); ++f) {
      const double var = g.variances[c][f];
      const double d = row[f] - g.means[c][f];
      s -= 0.5 * std::log(2.0 * std::numbers::pi * var) + d * d / (2.0 * var);
    }
    out[c] = s;
  }
  return out;
}

double knn_score(const KnnPayload& m, std::span<const double> row, std::vector<std::pair<double, std::size_t>>& buf) {
  const std::size_t width = m.means.size();
  std::vector<double> z(width, 0.0);
  for (std::size_t f = 0; f < width; ++f) {
    if (m.stds[f] > 0.0) z[f] = (row[f] - m.means[f]) / m.stds[f];
  }
  buf.resize(m.train.rows());
  for (std::size_t i = 0; i < m.train.rows(); ++i) {
    const auto t = m.train.row(i);
    double d = 0.0;
    for (std::size_t f = 0; f < width; ++f) {
      const double diff = z[f] - t[f];
      d += diff * diff;
    }
    buf[i] = {d, i};
  }
  const auto k = static_cast<std::size_t>(m.k);
  std::partial_sort(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(k), buf.end());
  std::size_t chatgpt = 0;
  for (std::size_t i = 0; i < k; ++i) chatgpt += m.labels[buf[i].second] == Author::ChatGpt ? 1 : 0;
  return static_cast<double>(chatgpt) / static_cast<double>(k);
}

}  // namespace

std::string_view to_string(ModelKind k) {
  switch (k) {
    case ModelKind::DT: return "DT";
    case ModelKind::RF: return "RF";
    case ModelKind::RUSBoost: return "RUSBOOST";
    case ModelKind::GNB: return "GNB";
    case ModelKind::KNN: return "KNN";
  }
  return "?";
}

std::optional<ModelKind> parse_model_kind(std::string_view text) {
  for (ModelKind k : kModelKinds) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

namespace {

// Keeps only the fields the kind reads, so equal models compare equal.
HyperParams relevant(ModelKind kind, const HyperParams& p) {
  HyperParams out;
  switch (kind) {
    case ModelKind::RF:
      out.n_trees = p.n_trees;
      out.max_features = p.max_features;
      out.bootstrap = p.bootstrap;
      [[fallthrough]];
    case ModelKind::DT:
      out.max_depth = p.max_depth;
      out.min_samples_split = p.min_samples_split;
      out.seed = p.seed;
      break;
    case ModelKind::RUSBoost:
      out.n_rounds = p.n_rounds;
      out.base_depth = p.base_depth;
      out.seed = p.seed;
      break;
    case ModelKind::GNB:
      break;
    case ModelKind::KNN:
      out.k = p.k;
      break;
  }
  return out;
}

}  // namespace

Model::Model(ModelKind kind, HyperParams params, std::vector<std::string> feature_names, ModelPayload learned)
    : kind_(kind), params_(relevant(kind, params)), feature_names_(std::move(feature_names)), learned_(std::move(learned)) {}

Model fit_decision_tree(const Matrix& x, const Labels& y, const HyperParams& params) {
  check_training_input(x, y);
  const TreeOptions opts{params.max_depth, params.min_samples_split, 0};
  const auto rows = all_rows(x.rows());
  return Model(ModelKind::DT, params, names_for(x.cols()), DecisionTree::fit(x, y, rows, opts, nullptr));
}

Model fit_random_forest(const Matrix& x, const Labels& y, const HyperParams& params) {
  check_training_input(x, y);
  if (params.n_trees < 1) throw UsageError("n_trees must be >= 1");
  const std::size_t width = x.cols();
  const std::size_t subset =
      params.max_features == 0 ? static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(width))))
                               : params.max_features;
  const TreeOptions opts{params.max_depth, params.min_samples_split, subset};
  const std::size_t n = x.rows();
  ForestPayload forest;
  forest.trees.resize(static_cast<std::size_t>(params.n_trees));
  parallel_for(forest.trees.size(), [&](std::size_t t) {
    Rng rng(derive_seed(params.seed, Stream::ForestTree, t));
    std::vector<std::size_t> rows;
    if (params.bootstrap) {
      rows.resize(n);
      for (auto& r : rows) r = rng.uniform_index(n);
    } else {
      rows = all_rows(n);
    }
    forest.trees[t] = DecisionTree::fit(x, y, rows, opts, &rng);
  });
  return Model(ModelKind::RF, params, names_for(width), std::move(forest));
}

double boosting_alpha(double error) { return 0.5 * std::log((1.0 - error) / error); }

Model fit_rusboost(const Matrix& x, const Labels& y, const HyperParams& params) {
  check_training_input(x, y);
  constexpr int kMaxRetries = 3;
  const std::size_t n = x.rows();
  std::array<std::vector<std::size_t>, 2> by_class;
  for (std::size_t i = 0; i < n; ++i) by_class[idx(y[i])].push_back(i);
  const std::size_t minority = std::min(by_class[0].size(), by_class[1].size());
  const TreeOptions opts{params.base_depth, 2, 0};

  std::vector<double> w(n, 1.0 / static_cast<double>(n));
  BoostPayload boost;
  std::uint64_t attempt = 0;
  for (int round = 0; round < params.n_rounds; ++round) {
    bool accepted = false;
    bool stop = false;
    for (int tries = 0; tries <= kMaxRetries && !accepted; ++tries) {
      Rng rng(derive_seed(params.seed, Stream::Boost, attempt++));
      std::vector<std::size_t> sample;
      sample.reserve(2 * minority);
      for (const auto& members : by_class) {
        std::vector<double> cumulative(members.size());
        double total = 0.0;
        for (std::size_t j = 0; j < members.size(); ++j) cumulative[j] = total += w[members[j]];
        for (std::size_t d = 0; d < minority; ++d) {
          const double u = rng.uniform01() * total;
          auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
          if (it == cumulative.end()) --it;
          sample.push_back(members[static_cast<std::size_t>(it - cumulative.begin())]);
        }
      }
      DecisionTree tree = DecisionTree::fit(x, y, sample, opts, nullptr);
      std::vector<bool> wrong(n);
      double error = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        wrong[i] = tree.predict(x.row(i)) != y[i];
        if (wrong[i]) error += w[i];
      }
      if (error >= 0.5) continue;
      accepted = true;
      if (error <= 0.0) {
        boost.learners.push_back(std::move(tree));
        boost.alphas.push_back(boosting_alpha(1.0 / (2.0 * static_cast<double>(n))));
        stop = true;
        break;
      }
      const double alpha = boosting_alpha(error);
      boost.learners.push_back(std::move(tree));
      boost.alphas.push_back(alpha);
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) sum += w[i] *= std::exp(wrong[i] ? alpha : -alpha);
      for (double& v : w) v /= sum;
    }
    if (stop || !accepted) break;
  }
  return Model(ModelKind::RUSBoost, params, names_for(x.cols()), std::move(boost));
}

Model fit_gnb(const Matrix& x, const Labels& y) {
  check_training_input(x, y);
  const std::size_t n = x.rows();
  const std::size_t width = x.cols();
  GnbPayload g;
  std::array<std::size_t, 2> counts{};
  for (Author a : kAuthors) {
    g.means[idx(a)].assign(width, 0.0);
    g.variances[idx(a)].assign(width, 0.0);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = idx(y[i]);
    ++counts[c];
    for (std::size_t f = 0; f < width; ++f) g.means[c][f] += x(i, f);
  }
  for (Author a : kAuthors) {
    for (double& m : g.means[idx(a)]) m /= static_cast<double>(counts[idx(a)]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = idx(y[i]);
    for (std::size_t f = 0; f < width; ++f) {
      const double d = x(i, f) - g.means[c][f];
      g.variances[c][f] += d * d;
    }
  }
  double max_var = 0.0;
  for (std::size_t f = 0; f < width; ++f) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += x(i, f);
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (std::size_t i = 0; i < n; ++i) var += (x(i, f) - mean) * (x(i, f) - mean);
    max_var = std::max(max_var, var / static_cast<double>(n));
  }
  const double floor = max_var > 0.0 ? 1e-9 * max_var : 1e-9;
  for (Author a : kAuthors) {
    const auto c = idx(a);
    for (double& v : g.variances[c]) v = std::max(v / static_cast<double>(counts[c]), floor);
    g.priors[c] = static_cast<double>(counts[c]) / static_cast<double>(n);
  }
  return Model(ModelKind::GNB, HyperParams{}, names_for(width), std::move(g));
}

Model fit_knn(const Matrix& x, const Labels& y, const HyperParams& params) {
  check_training_input(x, y);
  const int k = params.k;
  if (k < 1 || k % 2 == 0) throw BadK("k must be odd and positive, got " + std::to_string(k));
  if (static_cast<std::size_t>(k) > x.rows()) {
    throw BadK("k=" + std::to_string(k) + " exceeds the " + std::to_string(x.rows()) + " training rows");
  }
  constexpr double kStdFloor = 1e-12;
  const std::size_t n = x.rows();
  const std::size_t width = x.cols();
  KnnPayload m;
  m.k = k;
  m.means.assign(width, 0.0);
  m.stds.assign(width, 0.0);
  for (std::size_t f = 0; f < width; ++f) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += x(i, f);
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (std::size_t i = 0; i < n; ++i) var += (x(i, f) - mean) * (x(i, f) - mean);
    const double sd = std::sqrt(var / static_cast<double>(n));
    m.means[f] = mean;
    m.stds[f] = sd > kStdFloor ? sd : 0.0;
  }
  m.train = Matrix(n, width);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t f = 0; f < width; ++f) {
      m.train(i, f) = m.stds[f] > 0.0 ? (x(i, f) - m.means[f]) / m.stds[f] : 0.0;
    }
  }
  m.labels = y;
  HyperParams p;
  p.k = k;
  return Model(ModelKind::KNN, p, names_for(width), std::move(m));
}

Model fit(ModelKind kind, const Matrix& x, const Labels& y, const HyperParams& params) {
  switch (kind) {
    case ModelKind::DT: return fit_decision_tree(x, y, params);
    case ModelKind::RF: return fit_random_forest(x, y, params);
    case ModelKind::RUSBoost: return fit_rusboost(x, y, params);
    case ModelKind::GNB: return fit_gnb(x, y);
    case ModelKind::KNN: return fit_knn(x, y, params);
  }
  throw UsageError("unknown model kind");
}

std::array<double, 2> gnb_posteriors(const Model& model, std::span<const double> row) {
  const auto* g = std::get_if<GnbPayload>(&model.learned());
  if (g == nullptr) throw WrongModelKind("posteriors require a GNB model");
  if (row.size() != model.n_features()) throw SchemaMismatch("row width does not match the model");
  const auto jll = gnb_log_joint(*g, row);
  const double top = std::max(jll[0], jll[1]);
  const double e0 = std::exp(jll[0] - top);
  const double e1 = std::exp(jll[1] - top);
  return {e0 / (e0 + e1), e1 / (e0 + e1)};
}

Prediction predict(const Model& model, const Matrix& x) {
  if (x.cols() != model.n_features()) {
    throw SchemaMismatch("expected " + std::to_string(model.n_features()) + " feature columns, got " +
                         std::to_string(x.cols()));
  }
  Prediction out;
  out.labels.resize(x.rows());
  out.scores.resize(x.rows());
  std::vector<std::pair<double, std::size_t>> buf;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    const auto row = x.row(i);
    double score = 0.5;
    Author label = Author::ChatGpt;
    std::visit(
        [&](const auto& m) {
          using T = std::decay_t<decltype(m)>;
          if constexpr (std::is_same_v<T, DecisionTree>) {
            score = m.score(row);
            label = m.predict(row);
          } else if constexpr (std::is_same_v<T, ForestPayload>) {
            std::size_t votes = 0;
            for (const auto& t : m.trees) votes += t.predict(row) == Author::ChatGpt ? 1 : 0;
            score = static_cast<double>(votes) / static_cast<double>(m.trees.size());
            label = vote(score);
          } else if constexpr (std::is_same_v<T, BoostPayload>) {
            double pos = 0.0;
            double total = 0.0;
            for (std::size_t t = 0; t < m.learners.size(); ++t) {
              total += m.alphas[t];
              if (m.learners[t].predict(row) == Author::ChatGpt) pos += m.alphas[t];
            }
            score = total > 0.0 ? pos / total : 0.5;
            label = vote(score);
          } else if constexpr (std::is_same_v<T, GnbPayload>) {
            const auto jll = gnb_log_joint(m, row);
            const double top = std::max(jll[0], jll[1]);
            const double e0 = std::exp(jll[0] - top);
            const double e1 = std::exp(jll[1] - top);
            score = e0 / (e0 + e1);
            label = jll[0] >= jll[1] ? Author::ChatGpt : Author::Human;
          } else {
            score = knn_score(m, row, buf);
            label = vote(score);
          }
        },
        model.learned());
    out.labels[i] = label;
    out.scores[i] = score;
  }
  return out;
}

// ---- serialization ----

namespace {

json tree_to_json(const DecisionTree& t) {
  json nodes = json::array();
  for (const auto& n : t.nodes()) {
    nodes.push_back({n.feature, n.threshold, n.left, n.right, n.n_chatgpt, n.n_human});
  }
  return nodes;
}

DecisionTree tree_from_json(const json& j, std::size_t width) {
  std::vector<TreeNode> nodes;
  for (const auto& a : j) {
    if (!a.is_array() || a.size() != 6) throw SchemaMismatch("malformed tree node");
    TreeNode n;
    n.feature = a[0].get<int>();
    n.threshold = a[1].get<double>();
    n.left = a[2].get<int>();
    n.right = a[3].get<int>();
    n.n_chatgpt = a[4].get<std::int64_t>();
    n.n_human = a[5].get<std::int64_t>();
    nodes.push_back(n);
  }
  const auto size = static_cast<int>(nodes.size());
  if (size == 0) throw SchemaMismatch("empty tree");
  for (int i = 0; i < size; ++i) {
    const auto& n = nodes[static_cast<std::size_t>(i)];
    if (n.is_leaf()) continue;
    // children are stored after their parent, which also rules out cycles
    if (static_cast<std::size_t>(n.feature) >= width || n.left <= i || n.left >= size || n.right <= i ||
        n.right >= size) {
      throw SchemaMismatch("malformed tree node");
    }
  }
  return DecisionTree(std::move(nodes));
}

json params_to_json(ModelKind kind, const HyperParams& p) {
  json j = json::object();
  const json depth = p.max_depth ? json(*p.max_depth) : json(nullptr);
  switch (kind) {
    case ModelKind::DT:
      j = {{"max_depth", depth}, {"min_samples_split", p.min_samples_split}, {"seed", p.seed}};
      break;
    case ModelKind::RF:
      j = {{"n_trees", p.n_trees},     {"max_depth", depth},       {"min_samples_split", p.min_samples_split},
           {"max_features", p.max_features}, {"bootstrap", p.bootstrap}, {"seed", p.seed}};
      break;
    case ModelKind::RUSBoost:
      j = {{"n_rounds", p.n_rounds}, {"base_depth", p.base_depth}, {"seed", p.seed}};
      break;
    case ModelKind::GNB:
      break;
    case ModelKind::KNN:
      j = {{"k", p.k}};
      break;
  }
  return j;
}

HyperParams params_from_json(const json& j) {
  HyperParams p;
  if (j.contains("max_depth") && !j["max_depth"].is_null()) p.max_depth = j["max_depth"].get<int>();
  p.min_samples_split = j.value("min_samples_split", p.min_samples_split);
  p.n_trees = j.value("n_trees", p.n_trees);
  p.max_features = j.value("max_features", p.max_features);
  p.bootstrap = j.value("bootstrap", p.bootstrap);
  p.n_rounds = j.value("n_rounds", p.n_rounds);
  p.base_depth = j.value("base_depth", p.base_depth);
  p.k = j.value("k", p.k);
  p.seed = j.value("seed", p.seed);
  return p;
}

json labels_to_json(const Labels& y) {
  json a = json::array();
  for (Author l : y) a.push_back(to_string(l));
  return a;
}

Labels labels_from_json(const json& j) {
  Labels out;
  for (const auto& v : j) {
    const auto a = parse_author(v.get<std::string>());
    if (!a) throw SchemaMismatch("bad label in model file");
    out.push_back(*a);
  }
  return out;
}

json learned_to_json(const ModelPayload& payload) {
  return std::visit(
      [](const auto& m) -> json {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, DecisionTree>) {
          return {{"nodes", tree_to_json(m)}};
        } else if constexpr (std::is_same_v<T, ForestPayload>) {
          json trees = json::array();
          for (const auto& t : m.trees) trees.push_back(tree_to_json(t));
          return {{"trees", trees}};
        } else if constexpr (std::is_same_v<T, BoostPayload>) {
          json learners = json::array();
          for (const auto& t : m.learners) learners.push_back(tree_to_json(t));
          return {{"learners", learners}, {"alphas", m.alphas}};
        } else if constexpr (std::is_same_v<T, GnbPayload>) {
          return {{"means", {m.means[0], m.means[1]}},
                  {"variances", {m.variances[0], m.variances[1]}},
                  {"priors", m.priors}};
        } else {
          json rows = json::array();
          for (std::size_t i = 0; i < m.train.rows(); ++i) {
            const auto r = m.train.row(i);
            rows.push_back(std::vector<double>(r.begin(), r.end()));
          }
          return {{"k", m.k}, {"means", m.means}, {"stds", m.stds}, {"train", rows},
                  {"labels", labels_to_json(m.labels)}};
        }
      },
      payload);
}

ModelPayload learned_from_json(ModelKind kind, const json& j, std::size_t width) {
  auto check_width = [&](const std::vector<double>& v) {
    if (v.size() != width) throw SchemaMismatch("model vector width does not match feature_names");
  };
  switch (kind) {
    case ModelKind::DT:
      return tree_from_json(j.at("nodes"), width);
    case ModelKind::RF: {
      ForestPayload f;
      for (const auto& t : j.at("trees")) f.trees.push_back(tree_from_json(t, width));
      if (f.trees.empty()) throw SchemaMismatch("forest has no trees");
      return f;
    }
    case ModelKind::RUSBoost: {
      BoostPayload b;
      for (const auto& t : j.at("learners")) b.learners.push_back(tree_from_json(t, width));
      b.alphas = j.at("alphas").get<std::vector<double>>();
      if (b.alphas.size() != b.learners.size()) throw SchemaMismatch("learner/alpha count mismatch");
      return b;
    }
    case ModelKind::GNB: {
      GnbPayload g;
      for (std::size_t c = 0; c < 2; ++c) {
        g.means[c] = j.at("means").at(c).get<std::vector<double>>();
        g.variances[c] = j.at("variances").at(c).get<std::vector<double>>();
        check_width(g.means[c]);
        check_width(g.variances[c]);
      }
      g.priors = j.at("priors").get<std::array<double, 2>>();
      return g;
    }
    case ModelKind::KNN: {
      KnnPayload m;
      m.k = j.at("k").get<int>();
      m.means = j.at("means").get<std::vector<double>>();
      m.stds = j.at("stds").get<std::vector<double>>();
      check_width(m.means);
      check_width(m.stds);
      const auto& rows = j.at("train");
      m.train = Matrix(rows.size(), width);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto r = rows[i].get<std::vector<double>>();
        check_width(r);
        std::copy(r.begin(), r.end(), m.train.row(i).begin());
      }
      m.labels = labels_from_json(j.at("labels"));
      if (m.labels.size() != m.train.rows() || m.k < 1 || static_cast<std::size_t>(m.k) > m.labels.size()) {
        throw SchemaMismatch("inconsistent KNN payload");
      }
      return m;
    }
  }
  throw SchemaMismatch("unknown model kind");
}

}  // namespace

nlohmann::json params_json(ModelKind kind, const HyperParams& params) { return params_to_json(kind, params); }

std::string serialize_model(const Model& model) {
  json j;
  j["schema"] = kModelSchema;
  j["kind"] = to_string(model.kind());
  j["params"] = params_to_json(model.kind(), model.params());
  j["feature_names"] = model.feature_names();
  j["learned"] = learned_to_json(model.learned());
  return j.dump(1) + "\n";
}

Model parse_model(std::string_view text) {
  try {
    const json j = json::parse(text);
    if (j.at("schema").get<std::string>() != kModelSchema) throw SchemaMismatch("unsupported model schema");
    const auto kind = parse_model_kind(j.at("kind").get<std::string>());
    if (!kind) throw SchemaMismatch("unknown model kind in model file");
    auto names = j.at("feature_names").get<std::vector<std::string>>();
    HyperParams params = params_from_json(j.at("params"));
    auto learned = learned_from_json(*kind, j.at("learned"), names.size());
    return Model(*kind, params, std::move(names), std::move(learned));
  } catch (const json::exception& e) {
    throw SchemaMismatch(std::string("malformed model file: ") + e.what());
  }
}

void save_model(const Model& model, const std::filesystem::path& path) {
  write_file_atomic(path, serialize_model(model));
}

Model load_model(const std::filesystem::path& path) { return parse_model(read_file(path)); }

}  // namespace stylo
