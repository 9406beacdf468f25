#include "stylo/evaluation.hpp"

#include <nlohmann/json.hpp>

namespace stylo {

namespace {

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

EvalReport report_from_confusion(const Confusion& cm) {
  EvalReport r;
  r.confusion = cm;
  r.n_test = cm[0][0] + cm[0][1] + cm[1][0] + cm[1][1];
  for (std::size_t c = 0; c < 2; ++c) {
    const std::size_t other = 1 - c;
    const std::size_t tp = cm[c][c];
    auto& m = r.per_class[c];
    m.support = cm[c][c] + cm[c][other];
    m.precision = ratio(tp, tp + cm[other][c]);
    m.recall = ratio(tp, m.support);
    const double pr = m.precision + m.recall;
    m.f1 = pr == 0.0 ? 0.0 : 2.0 * m.precision * m.recall / pr;
  }
  r.accuracy = ratio(cm[0][0] + cm[1][1], r.n_test);
  r.macro_f1 = (r.per_class[0].f1 + r.per_class[1].f1) / 2.0;
  for (const auto& m : r.per_class) r.weighted_f1 += ratio(m.support, r.n_test) * m.f1;
  return r;
}

EvalReport evaluate(const Labels& predicted, const Labels& truth) {
  if (predicted.size() != truth.size()) {
    throw LengthMismatch("predicted (" + std::to_string(predicted.size()) + ") and true (" +
                         std::to_string(truth.size()) + ") label counts differ");
  }
  if (truth.empty()) throw LengthMismatch("cannot evaluate zero predictions");
  Confusion cm{};
  for (std::size_t i = 0; i < truth.size(); ++i) {
    ++cm[static_cast<std::size_t>(truth[i])][static_cast<std::size_t>(predicted[i])];
  }
  return report_from_confusion(cm);
}

nlohmann::json to_json(const EvalReport& r) {
  nlohmann::json per_class = nlohmann::json::object();
  for (Author a : kAuthors) {
    const auto& m = r.of(a);
    per_class[std::string(to_string(a))] = {
        {"precision", m.precision}, {"recall", m.recall}, {"f1", m.f1}, {"support", m.support}};
  }
  return {{"accuracy", r.accuracy},
          {"weighted_f1", r.weighted_f1},
          {"macro_f1", r.macro_f1},
          {"per_class", per_class},
          {"confusion", {{"labels", {"CHATGPT", "HUMAN"}}, {"matrix", r.confusion}}},
          {"n_test", r.n_test}};
}

}  // namespace stylo
