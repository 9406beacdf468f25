#pragma once

#include <array>
#include <cstddef>

#include <nlohmann/json_fwd.hpp>

#include "stylo/matrix.hpp"

namespace stylo {

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;

  bool operator==(const ClassMetrics&) const = default;
};

/// confusion[t][p]: samples of true class t predicted as p, indexed by Author.
using Confusion = std::array<std::array<std::size_t, 2>, 2>;

struct EvalReport {
  std::array<ClassMetrics, 2> per_class;  // indexed by Author
  double accuracy = 0.0;
  double weighted_f1 = 0.0;
  double macro_f1 = 0.0;
  Confusion confusion{};
  std::size_t n_test = 0;

  const ClassMetrics& of(Author a) const { return per_class[static_cast<std::size_t>(a)]; }
  bool operator==(const EvalReport&) const = default;
};

/// Zero denominators yield 0 for precision, recall and F1.
EvalReport report_from_confusion(const Confusion& confusion);

/// Throws LengthMismatch on differing or zero lengths.
EvalReport evaluate(const Labels& predicted, const Labels& truth);

nlohmann::json to_json(const EvalReport& report);

}  // namespace stylo
