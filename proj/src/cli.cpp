#include "stylo/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "stylo/corpus.hpp"
#include "stylo/evaluation.hpp"
#include "stylo/genharness.hpp"
#include "stylo/io.hpp"
#include "stylo/learn.hpp"
#include "stylo/metrics.hpp"
#include "stylo/model_selection.hpp"
#include "stylo/parallel.hpp"
#include "stylo/reliability.hpp"

namespace stylo::cli {

using nlohmann::json;

namespace {

// Thrown after diagnostics are printed, to carry a specific exit code.
struct Exit {
  int code;
};

json metrics_json(const MetricVector& m) {
  json j = json::object();
  const auto values = m.to_array();
  for (std::size_t i = 0; i < kNumFeatures; ++i) {
    const std::string name(kFeatureNames[i]);
    if (is_integer_feature(i)) {
      j[name] = static_cast<std::int64_t>(std::llround(values[i]));
    } else {
      j[name] = values[i];
    }
  }
  return j;
}

std::string metric_text(const MetricVector& m, std::size_t i) {
  const double v = m.to_array()[i];
  return is_integer_feature(i) ? std::to_string(std::llround(v)) : format_double(v);
}

/// Writes to `path` atomically, or to `out` when no path is given.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file_atomic(path, text);
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

ModelKind model_kind(const std::string& text) {
  std::string upper = text;
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  const auto k = parse_model_kind(upper);
  if (!k) throw UsageError("unknown model kind '" + text + "' (expected DT, RF, RUSBOOST, GNB or KNN)");
  return *k;
}

/// Hyperparameter flags shared by the training commands.
struct ParamFlags {
  int max_depth = -1;  // -1: unlimited
  int min_samples_split = 2;
  int n_trees = 100;
  int n_rounds = 50;
  int base_depth = 1;
  int k = 5;

  void add(CLI::App* cmd) {
    cmd->add_option("--max-depth", max_depth, "DT/RF depth cap, -1 for none")->capture_default_str();
    cmd->add_option("--min-samples-split", min_samples_split, "DT/RF")->capture_default_str();
    cmd->add_option("--n-trees", n_trees, "RF")->capture_default_str();
    cmd->add_option("--n-rounds", n_rounds, "RUSBOOST")->capture_default_str();
    cmd->add_option("--base-depth", base_depth, "RUSBOOST")->capture_default_str();
    cmd->add_option("--k", k, "KNN")->capture_default_str();
  }

  HyperParams params(std::uint64_t seed) const {
    HyperParams p;
    if (max_depth >= 0) p.max_depth = max_depth;
    p.min_samples_split = min_samples_split;
    p.n_trees = n_trees;
    p.n_rounds = n_rounds;
    p.base_depth = base_depth;
    p.k = k;
    p.seed = seed;
    return p;
  }
};

int cmd_analyze(const std::vector<std::string>& paths, const std::string& format, std::ostream& out,
                std::ostream& err) {
  if (paths.empty()) throw UsageError("analyze needs at least one file");
  json reports = json::array();
  std::ostringstream table;
  table << "file";
  for (auto name : kFeatureNames) table << '\t' << name;
  table << '\n';
  bool lex_failed = false;
  for (const auto& p : paths) {
    const std::string source = read_file(p);
    try {
      const MetricVector m = extract_metrics(source);
      reports.push_back({{"file", p}, {"metrics", metrics_json(m)}});
      table << p;
      for (std::size_t i = 0; i < kNumFeatures; ++i) table << '\t' << metric_text(m, i);
      table << '\n';
    } catch (const LexError& e) {
      lex_failed = true;
      err << p << ": " << e.what() << "\n";
      reports.push_back({{"file", p}, {"error", {{"line", e.line()}, {"message", e.what()}}}});
    }
  }
  out << (format == "json" ? dump(reports) : table.str());
  return lex_failed ? kLex : kOk;
}

int cmd_featurize(const std::string& corpus, const std::string& out_path, std::ostream& out, std::ostream& err) {
  const IngestResult r = ingest_corpus(corpus);
  for (const auto& d : r.diagnostics) err << d.path << ": " << d.message << "\n";
  emit(out_path, format_features(r.dataset), out);
  if (!out_path.empty()) {
    err << "wrote " << r.dataset.size() << " samples to " << out_path << "\n";
  }
  return r.diagnostics.empty() ? kOk : kLex;
}

int cmd_train(const std::string& features, const std::string& kind_text, std::uint64_t seed, const std::string& grid,
              double train_fraction, const ParamFlags& flags, const std::string& model_out,
              const std::string& test_out, std::ostream& out) {
  const ModelKind kind = model_kind(kind_text);
  const Dataset data = read_features(features);
  data.validate();
  if (!(train_fraction > 0.0 && train_fraction <= 1.0)) throw UsageError("--train-fraction must be in (0, 1]");
  Dataset train = data;
  Dataset test;
  if (train_fraction < 1.0) {
    Split s = stratified_split(data, {train_fraction, seed});
    train = std::move(s.train);
    test = std::move(s.test);
  }
  const Matrix x = train.features();
  const Labels y = train.labels();
  json summary = {{"model", to_string(kind)}, {"seed", seed}, {"n_train", train.size()}, {"n_test", test.size()}};
  HyperParams params = flags.params(seed);
  if (grid == "on") {
    const GridSearchResult gs = grid_search(x, y, kind, default_grid(kind), seed);
    params = gs.best;
    summary["grid_search"] = to_json(kind, gs);
  }
  const Model model = fit(kind, x, y, params);
  summary["params"] = params_json(kind, params);
  if (!test.empty()) {
    summary["test_evaluation"] = to_json(evaluate(predict(model, test.features()).labels, test.labels()));
    if (!test_out.empty()) write_features(test, test_out);
  }
  save_model(model, model_out);
  out << dump(summary);
  return kOk;
}

int cmd_evaluate(const std::string& model_path, const std::string& features, bool per_category,
                 const std::string& out_path, std::ostream& out) {
  const Model model = load_model(model_path);
  const Dataset data = read_features(features);
  const Prediction p = predict(model, data.features());
  json report = to_json(evaluate(p.labels, data.labels()));
  if (per_category) report["per_category"] = to_json(per_category_eval(model, data));
  emit(out_path, dump(report), out);
  return kOk;
}

int cmd_reliability(const std::string& test, const std::string& features, const std::string& kind_text,
                    std::uint64_t seed, int n_seeds, double train_fraction, bool holdout, const ParamFlags& flags,
                    const std::string& format, const std::string& out_path, std::ostream& out) {
  const ModelKind kind = model_kind(kind_text);
  const Dataset data = read_features(features);
  data.validate();
  const HyperParams params = flags.params(seed);
  const bool as_json = format == "json";
  if (test == "split") {
    if (n_seeds < 1) throw UsageError("--seeds must be >= 1");
    std::vector<std::uint64_t> seeds;
    for (int i = 0; i < n_seeds; ++i) seeds.push_back(seed + static_cast<std::uint64_t>(i));
    const SweepCurve c = split_ratio_sweep(data, kind, params, seeds);
    emit(out_path, as_json ? dump(to_json(c)) : to_csv(c), out);
    return kOk;
  }
  if (test == "category") {
    std::map<Category, EvalReport> reports;
    if (holdout) {
      reports = category_holdout(data, kind, params);
    } else {
      const Split s = stratified_split(data, {train_fraction, seed});
      const Model m = fit(kind, s.train.features(), s.train.labels(), params);
      reports = per_category_eval(m, s.test);
    }
    emit(out_path, as_json ? dump(to_json(reports)) : to_csv(reports), out);
    return kOk;
  }
  // noise
  const Split s = stratified_split(data, {train_fraction, seed});
  const Matrix x_train = s.train.features();
  const Model m = fit(kind, x_train, s.train.labels(), params);
  const auto sigmas = default_sigmas();
  const SweepCurve c = gaussian_noise_sweep(m, feature_stats(x_train), s.test.features(), s.test.labels(), sigmas, seed);
  emit(out_path, as_json ? dump(to_json(c)) : to_csv(c), out);
  return kOk;
}

int cmd_importance(const std::string& features, int repeats, std::uint64_t seed, double train_fraction,
                   const ParamFlags& flags, const std::string& format, const std::string& out_path,
                   std::ostream& out) {
  const Dataset data = read_features(features);
  data.validate();
  DualImportanceOptions o;
  o.iterations = repeats;
  o.train_fraction = train_fraction;
  o.forest = flags.params(seed);
  o.seed = seed;
  const ImportanceReport r = dual_importance(data, o);
  emit(out_path, format == "json" ? dump(to_json(r)) : to_csv(r), out);
  return kOk;
}

int cmd_detect(const std::string& model_path, const std::string& file, std::ostream& out) {
  const Model model = load_model(model_path);
  const MetricVector m = extract_metrics(read_file(file));
  Matrix x(1, kNumFeatures);
  const auto values = m.to_array();
  std::copy(values.begin(), values.end(), x.row(0).begin());
  const Prediction p = predict(model, x);
  out << dump({{"file", file},
               {"label", to_string(p.labels[0])},
               {"score", p.scores[0]},
               {"model", to_string(model.kind())},
               {"metrics", metrics_json(m)}});
  return kOk;
}

int cmd_generate(const std::string& manifest, const std::string& corpus, const EndpointConfig& config,
                 std::size_t concurrency, const std::string& log_path, std::ostream& out, std::ostream& err) {
  config.validate();
  const auto records = read_manifest(manifest);
  auto endpoint = make_http_endpoint(config);
  BatchOptions o;
  o.max_retries = config.max_retries;
  o.concurrency = concurrency;
  const GenerationLog log = batch_generate(records, *endpoint, corpus, o);
  for (const auto& e : log.entries) {
    if (e.outcome != Outcome::Written) err << e.id << ": " << to_string(e.outcome) << " " << e.message << "\n";
  }
  emit(log_path, dump(to_json(log)), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Code stylometry: metrics, datasets, classifiers and reliability tests", "stylo"};
  app.require_subcommand(1);
  std::size_t threads = 0;
  app.add_option("--threads", threads, "worker threads, 0 = all cores");

  // analyze
  std::vector<std::string> paths;
  std::string format = "table";
  auto* analyze = app.add_subcommand("analyze", "print the 14 metrics for source files");
  analyze->add_option("paths", paths, "source files");
  analyze->add_option("--format", format)->check(CLI::IsMember({"table", "json"}))->capture_default_str();

  // featurize
  std::string corpus;
  std::string out_path;
  auto* featurize = app.add_subcommand("featurize", "build a feature CSV from a corpus directory");
  featurize->add_option("--corpus", corpus)->required();
  featurize->add_option("--out", out_path, "feature CSV (default: stdout)");

  // shared
  std::string features;
  std::string kind = "RF";
  std::uint64_t seed = 0;
  double train_fraction = 0.8;
  ParamFlags flags;
  std::string table_format = "csv";

  // train
  std::string grid = "off";
  std::string model_out;
  std::string test_out;
  ParamFlags train_flags;
  auto* train = app.add_subcommand("train", "fit a classifier on a feature CSV");
  train->add_option("--features", features)->required();
  train->add_option("--model", kind, "DT, RF, RUSBOOST, GNB or KNN")->required();
  train->add_option("--seed", seed)->capture_default_str();
  train->add_option("--grid", grid)->check(CLI::IsMember({"on", "off"}))->capture_default_str();
  train->add_option("--train-fraction", train_fraction, "1 trains on everything")->capture_default_str();
  train->add_option("--out", model_out, "model file")->required();
  train->add_option("--test-out", test_out, "write the held-out rows as a feature CSV");
  train_flags.add(train);

  // evaluate
  std::string model_path;
  bool per_category = false;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "score a saved model on a feature CSV");
  evaluate_cmd->add_option("--model", model_path)->required();
  evaluate_cmd->add_option("--features", features)->required();
  evaluate_cmd->add_flag("--per-category", per_category);
  evaluate_cmd->add_option("--out", out_path);

  // reliability
  std::string test;
  int n_seeds = 1;
  bool holdout = false;
  auto* reliability = app.add_subcommand("reliability", "split-ratio, per-category or noise robustness test");
  reliability->add_option("--test", test)->required()->check(CLI::IsMember({"split", "category", "noise"}));
  reliability->add_option("--features", features)->required();
  reliability->add_option("--model", kind)->capture_default_str();
  reliability->add_option("--seed", seed)->capture_default_str();
  reliability->add_option("--seeds", n_seeds, "split test: runs per ratio, seeds seed..seed+n-1")->capture_default_str();
  reliability->add_option("--train-fraction", train_fraction)->capture_default_str();
  reliability->add_flag("--holdout", holdout, "category test: train on four categories, test on the fifth");
  reliability->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  reliability->add_option("--out", out_path);
  flags.add(reliability);

  // importance
  int repeats = 1000;
  ParamFlags forest_flags;
  auto* importance = app.add_subcommand("importance", "impurity + permutation feature importance with RF");
  importance->add_option("--features", features)->required();
  importance->add_option("--repeats", repeats, "iterations")->capture_default_str();
  importance->add_option("--seed", seed)->capture_default_str();
  importance->add_option("--train-fraction", train_fraction)->capture_default_str();
  importance->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  importance->add_option("--out", out_path);
  forest_flags.add(importance);

  // detect
  std::string file;
  auto* detect = app.add_subcommand("detect", "classify one source file with a saved model");
  detect->add_option("--model", model_path)->required();
  detect->add_option("file", file)->required();

  // generate
  std::string manifest;
  EndpointConfig endpoint;
  std::size_t concurrency = 4;
  std::string log_path;
  auto* generate = app.add_subcommand("generate", "regenerate chatgpt.py files from a prompt manifest");
  generate->add_option("--manifest", manifest)->required();
  generate->add_option("--corpus", corpus)->required();
  generate->add_option("--base-url", endpoint.base_url, "scheme://host[:port]")->required();
  generate->add_option("--path", endpoint.path)->capture_default_str();
  generate->add_option("--model-name", endpoint.model)->required();
  generate->add_option("--token-env", endpoint.token_env, "environment variable holding the API token")->required();
  generate->add_option("--timeout", endpoint.timeout_seconds)->capture_default_str();
  generate->add_option("--retries", endpoint.max_retries)->capture_default_str();
  generate->add_option("--concurrency", concurrency)->capture_default_str();
  generate->add_option("--log", log_path, "generation log (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    set_max_threads(threads);
    if (analyze->parsed()) return cmd_analyze(paths, format, out, err);
    if (featurize->parsed()) return cmd_featurize(corpus, out_path, out, err);
    if (train->parsed()) {
      return cmd_train(features, kind, seed, grid, train_fraction, train_flags, model_out, test_out, out);
    }
    if (evaluate_cmd->parsed()) return cmd_evaluate(model_path, features, per_category, out_path, out);
    if (reliability->parsed()) {
      return cmd_reliability(test, features, kind, seed, n_seeds, train_fraction, holdout, flags, table_format,
                             out_path, out);
    }
    if (importance->parsed()) {
      return cmd_importance(features, repeats, seed, train_fraction, forest_flags, table_format, out_path, out);
    }
    if (detect->parsed()) return cmd_detect(model_path, file, out);
    if (generate->parsed()) return cmd_generate(manifest, corpus, endpoint, concurrency, log_path, out, err);
  } catch (const LexError& e) {
    err << "error: lexing failed: " << e.what() << "\n";
    return kLex;
  } catch (const DegenerateData& e) {
    err << "error: " << e.what() << "\n";
    return kDegenerate;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  }
  err << "error: no command given\n";
  return kUsage;
}

}  // namespace stylo::cli
