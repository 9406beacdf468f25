#include "stylo/reliability.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <nlohmann/json.hpp>

#include "stylo/csv.hpp"
#include "stylo/io.hpp"
#include "stylo/parallel.hpp"

namespace stylo {

using nlohmann::json;

namespace {

Confusion add(const Confusion& a, const Confusion& b) {
  Confusion out{};
  for (std::size_t t = 0; t < 2; ++t) {
    for (std::size_t p = 0; p < 2; ++p) out[t][p] = a[t][p] + b[t][p];
  }
  return out;
}

SweepPoint summarize(double x, const std::vector<EvalReport>& runs) {
  SweepPoint point;
  point.x = x;
  point.runs = runs.size();
  Confusion pooled{};
  double acc = 0.0;
  double wf1 = 0.0;
  for (const auto& r : runs) {
    pooled = add(pooled, r.confusion);
    acc += r.accuracy;
    wf1 += r.weighted_f1;
  }
  point.report = report_from_confusion(pooled);
  point.mean_accuracy = acc / static_cast<double>(runs.size());
  point.mean_weighted_f1 = wf1 / static_cast<double>(runs.size());
  return point;
}

EvalReport evaluate_model(const Model& model, const Matrix& x, const Labels& y) {
  return evaluate(predict(model, x).labels, y);
}

std::vector<double> average(const std::vector<std::vector<double>>& vs) {
  std::vector<double> out(vs.front().size(), 0.0);
  for (const auto& v : vs) {
    for (std::size_t i = 0; i < v.size(); ++i) out[i] += v[i];
  }
  for (double& v : out) v /= static_cast<double>(vs.size());
  return out;
}

}  // namespace

std::string_view to_string(SweepKind k) { return k == SweepKind::TrainFraction ? "train_fraction" : "noise_sigma"; }

std::vector<double> split_ratios() {
  std::vector<double> out;
  for (int pct = 10; pct <= 95; pct += 5) out.push_back(pct / 100.0);
  return out;
}

SweepCurve split_ratio_sweep(const Dataset& data, ModelKind kind, const HyperParams& params,
                             std::span<const std::uint64_t> seeds) {
  if (seeds.empty()) throw UsageError("split sweep needs at least one seed");
  const auto ratios = split_ratios();
  std::vector<EvalReport> reports(ratios.size() * seeds.size());
  parallel_for(reports.size(), [&](std::size_t cell) {
    const double ratio = ratios[cell / seeds.size()];
    const std::uint64_t seed = seeds[cell % seeds.size()];
    const Split s = stratified_split(data, {ratio, seed});
    HyperParams p = params;
    p.seed = seed;
    const Model m = fit(kind, s.train.features(), s.train.labels(), p);
    reports[cell] = evaluate_model(m, s.test.features(), s.test.labels());
  });
  SweepCurve curve{SweepKind::TrainFraction, {}};
  for (std::size_t r = 0; r < ratios.size(); ++r) {
    const auto first = reports.begin() + static_cast<std::ptrdiff_t>(r * seeds.size());
    curve.points.push_back(
        summarize(ratios[r], std::vector<EvalReport>(first, first + static_cast<std::ptrdiff_t>(seeds.size()))));
  }
  return curve;
}

std::map<Category, EvalReport> per_category_eval(const Model& model, const Dataset& test) {
  std::map<Category, Dataset> parts;
  for (const auto& s : test.samples) parts[s.category].samples.push_back(s);
  std::map<Category, EvalReport> out;
  for (const auto& [cat, part] : parts) out.emplace(cat, evaluate_model(model, part.features(), part.labels()));
  return out;
}

std::map<Category, EvalReport> category_holdout(const Dataset& data, ModelKind kind, const HyperParams& params) {
  std::vector<Category> present;
  for (Category c : kCategories) {
    if (std::any_of(data.samples.begin(), data.samples.end(), [&](const Sample& s) { return s.category == c; })) {
      present.push_back(c);
    }
  }
  std::vector<EvalReport> reports(present.size());
  parallel_for(present.size(), [&](std::size_t i) {
    Dataset train;
    Dataset test;
    for (const auto& s : data.samples) (s.category == present[i] ? test : train).samples.push_back(s);
    const Model m = fit(kind, train.features(), train.labels(), params);
    reports[i] = evaluate_model(m, test.features(), test.labels());
  });
  std::map<Category, EvalReport> out;
  for (std::size_t i = 0; i < present.size(); ++i) out.emplace(present[i], reports[i]);
  return out;
}

FeatureStats feature_stats(const Matrix& x) {
  FeatureStats st;
  st.mean.assign(x.cols(), 0.0);
  st.std.assign(x.cols(), 0.0);
  if (x.rows() == 0) return st;
  const double n = static_cast<double>(x.rows());
  for (std::size_t f = 0; f < x.cols(); ++f) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.rows(); ++i) sum += x(i, f);
    const double mean = sum / n;
    double var = 0.0;
    for (std::size_t i = 0; i < x.rows(); ++i) var += (x(i, f) - mean) * (x(i, f) - mean);
    st.mean[f] = mean;
    st.std[f] = std::sqrt(var / n);
  }
  return st;
}

Matrix add_gaussian_noise(const Matrix& x, const FeatureStats& stats, double sigma, Rng& rng) {
  Matrix noisy = x;
  for (std::size_t i = 0; i < noisy.rows(); ++i) {
    for (std::size_t f = 0; f < noisy.cols(); ++f) noisy(i, f) += sigma * stats.std[f] * rng.normal();
  }
  return noisy;
}

std::vector<double> default_sigmas() {
  std::vector<double> out;
  for (int j = 0; j <= 20; ++j) out.push_back(j / 10.0);
  return out;
}

SweepCurve gaussian_noise_sweep(const Model& model, const FeatureStats& train, const Matrix& x_test,
                                const Labels& y_test, std::span<const double> sigmas, std::uint64_t seed) {
  if (sigmas.empty()) throw UsageError("noise sweep needs at least one sigma");
  for (std::size_t j = 0; j < sigmas.size(); ++j) {
    if (!(sigmas[j] >= 0.0) || (j > 0 && !(sigmas[j] > sigmas[j - 1]))) {
      throw UsageError("sigmas must be nonnegative and strictly ascending");
    }
  }
  if (train.std.size() != x_test.cols()) throw SchemaMismatch("training stats width does not match test features");
  std::vector<EvalReport> reports(sigmas.size());
  parallel_for(sigmas.size(), [&](std::size_t j) {
    const double sigma = sigmas[j];
    if (sigma == 0.0) {
      reports[j] = evaluate_model(model, x_test, y_test);
      return;
    }
    Rng rng(derive_seed(seed, Stream::Noise, j));
    reports[j] = evaluate_model(model, add_gaussian_noise(x_test, train, sigma, rng), y_test);
  });
  SweepCurve curve{SweepKind::NoiseSigma, {}};
  for (std::size_t j = 0; j < sigmas.size(); ++j) curve.points.push_back(summarize(sigmas[j], {reports[j]}));
  return curve;
}

std::vector<double> normalize_importance(std::vector<double> v) {
  double sum = 0.0;
  for (double& x : v) {
    x = std::max(x, 0.0);
    sum += x;
  }
  if (sum > 0.0) {
    for (double& x : v) x /= sum;
  }
  return v;
}

std::vector<double> impurity_importance(const Model& rf) {
  const auto* forest = std::get_if<ForestPayload>(&rf.learned());
  if (rf.kind() != ModelKind::RF || forest == nullptr) {
    throw WrongModelKind("impurity importance requires an RF model, got " + std::string(to_string(rf.kind())));
  }
  std::vector<std::vector<double>> per_tree;
  for (const auto& t : forest->trees) per_tree.push_back(t.impurity_decrease(rf.n_features()));
  return normalize_importance(average(per_tree));
}

std::vector<double> permutation_drops(const Model& model, const Matrix& x, const Labels& y, int repeats,
                                      std::uint64_t seed) {
  if (repeats < 1) throw UsageError("permutation repeats must be >= 1");
  if (x.cols() != model.n_features()) throw SchemaMismatch("feature width does not match the model");
  const double baseline = evaluate_model(model, x, y).weighted_f1;
  const auto r = static_cast<std::size_t>(repeats);
  const std::size_t width = x.cols();
  // each cell stores baseline - permuted, so a no-op permutation contributes exactly 0
  std::vector<double> diffs(width * r, 0.0);
  parallel_for(diffs.size(), [&](std::size_t cell) {
    const std::size_t f = cell / r;
    Matrix shuffled = x;
    std::vector<double> col(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) col[i] = x(i, f);
    Rng rng(derive_seed(seed, Stream::Permutation, cell));
    rng.shuffle(std::span<double>(col));
    for (std::size_t i = 0; i < x.rows(); ++i) shuffled(i, f) = col[i];
    diffs[cell] = baseline - evaluate_model(model, shuffled, y).weighted_f1;
  });
  std::vector<double> out(width, 0.0);
  for (std::size_t f = 0; f < width; ++f) {
    double sum = 0.0;
    for (std::size_t k = 0; k < r; ++k) sum += diffs[f * r + k];
    out[f] = sum / static_cast<double>(r);
  }
  return out;
}

std::vector<double> permutation_importance(const Model& model, const Matrix& x, const Labels& y, int repeats,
                                           std::uint64_t seed) {
  return normalize_importance(permutation_drops(model, x, y, repeats, seed));
}

ImportanceReport combined_importance(std::span<const double> impurity, std::span<const double> permutation,
                                     std::span<const std::string> names) {
  if (impurity.size() != permutation.size() || impurity.size() != names.size()) {
    throw LengthMismatch("importance vectors and feature names differ in length");
  }
  ImportanceReport report;
  for (std::size_t i = 0; i < names.size(); ++i) {
    report.rows.push_back({names[i], impurity[i], permutation[i], (impurity[i] + permutation[i]) / 2.0});
  }
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const ImportanceRow& a, const ImportanceRow& b) { return a.mean > b.mean; });
  return report;
}

ImportanceReport dual_importance(const Dataset& data, const DualImportanceOptions& options) {
  if (options.iterations < 1) throw UsageError("importance iterations must be >= 1");
  const Split split = stratified_split(data, {options.train_fraction, options.seed});
  const Matrix x_train = split.train.features();
  const Labels y_train = split.train.labels();
  const Matrix x_test = split.test.features();
  const Labels y_test = split.test.labels();
  const auto n = static_cast<std::size_t>(options.iterations);
  std::vector<std::vector<double>> impurity(n);
  std::vector<std::vector<double>> permutation(n);
  parallel_for(n, [&](std::size_t i) {
    HyperParams p = options.forest;
    p.seed = derive_seed(options.seed, Stream::Importance, i);
    const Model rf = fit_random_forest(x_train, y_train, p);
    impurity[i] = impurity_importance(rf);
    permutation[i] = permutation_importance(rf, x_test, y_test, options.permutation_repeats, p.seed);
  });
  const auto imp = normalize_importance(average(impurity));
  const auto perm = normalize_importance(average(permutation));
  std::vector<std::string> names;
  if (x_train.cols() == kNumFeatures) {
    for (auto name : kFeatureNames) names.emplace_back(name);
  } else {
    for (std::size_t f = 0; f < x_train.cols(); ++f) names.push_back("f" + std::to_string(f));
  }
  return combined_importance(imp, perm, names);
}

// ---- output ----

json to_json(const SweepCurve& curve) {
  json points = json::array();
  for (const auto& p : curve.points) {
    points.push_back({{"x", p.x},
                      {"mean_accuracy", p.mean_accuracy},
                      {"mean_weighted_f1", p.mean_weighted_f1},
                      {"runs", p.runs},
                      {"pooled", to_json(p.report)}});
  }
  return {{"sweep", to_string(curve.kind)}, {"points", points}};
}

std::string to_csv(const SweepCurve& curve) {
  std::string out = csv::format_row({std::string(to_string(curve.kind)), "mean_accuracy", "mean_weighted_f1",
                                     "pooled_accuracy", "pooled_weighted_f1", "runs", "n_test"});
  for (const auto& p : curve.points) {
    out += csv::format_row({format_double(p.x), format_double(p.mean_accuracy), format_double(p.mean_weighted_f1),
                            format_double(p.report.accuracy), format_double(p.report.weighted_f1),
                            std::to_string(p.runs), std::to_string(p.report.n_test)});
  }
  return out;
}

json to_json(const std::map<Category, EvalReport>& reports) {
  json out = json::object();
  for (const auto& [cat, r] : reports) out[std::string(to_string(cat))] = to_json(r);
  return out;
}

std::string to_csv(const std::map<Category, EvalReport>& reports) {
  std::string out = csv::format_row({"category", "n_test", "accuracy", "weighted_f1", "chatgpt_as_chatgpt",
                                     "chatgpt_as_human", "human_as_chatgpt", "human_as_human"});
  for (const auto& [cat, r] : reports) {
    out += csv::format_row({std::string(to_string(cat)), std::to_string(r.n_test), format_double(r.accuracy),
                            format_double(r.weighted_f1), std::to_string(r.confusion[0][0]),
                            std::to_string(r.confusion[0][1]), std::to_string(r.confusion[1][0]),
                            std::to_string(r.confusion[1][1])});
  }
  return out;
}

json to_json(const ImportanceReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"feature", r.feature},
                    {"impurity_importance", r.impurity},
                    {"permutation_importance", r.permutation},
                    {"mean_importance", r.mean}});
  }
  return {{"importance", rows}};
}

std::string to_csv(const ImportanceReport& report) {
  std::string out = csv::format_row({"feature", "impurity_importance", "permutation_importance", "mean_importance"});
  for (const auto& r : report.rows) {
    out += csv::format_row({r.feature, format_double(r.impurity), format_double(r.permutation), format_double(r.mean)});
  }
  return out;
}

}  // namespace stylo
