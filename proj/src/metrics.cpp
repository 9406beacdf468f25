#include "stylo/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace stylo {

namespace {

bool is_literal_keyword(std::string_view text) {
  return text == "True" || text == "False" || text == "None";
}

bool is_decision_keyword(std::string_view text) {
  return text == "if" || text == "elif" || text == "for" || text == "while" ||
         text == "except" || text == "assert" || text == "and" || text == "or";
}

bool is_closing_bracket(std::string_view text) {
  return text == ")" || text == "]" || text == "}";
}

}  // namespace

std::array<double, kNumFeatures> MetricVector::to_array() const {
  return {static_cast<double>(cyclomatic_complexity),
          halstead_difficulty,
          halstead_effort,
          halstead_volume,
          halstead_time,
          halstead_bugs,
          static_cast<double>(sloc),
          static_cast<double>(lloc),
          static_cast<double>(diff_sloc_lloc),
          static_cast<double>(n_lines),
          static_cast<double>(n_comments),
          static_cast<double>(n_functions),
          static_cast<double>(n_classes),
          maintainability_index};
}

MetricVector MetricVector::from_array(std::span<const double, kNumFeatures> v) {
  auto as_int = [](double x) { return static_cast<std::int64_t>(std::llround(x)); };
  MetricVector m;
  m.cyclomatic_complexity = as_int(v[0]);
  m.halstead_difficulty = v[1];
  m.halstead_effort = v[2];
  m.halstead_volume = v[3];
  m.halstead_time = v[4];
  m.halstead_bugs = v[5];
  m.sloc = as_int(v[6]);
  m.lloc = as_int(v[7]);
  m.diff_sloc_lloc = as_int(v[8]);
  m.n_lines = as_int(v[9]);
  m.n_comments = as_int(v[10]);
  m.n_functions = as_int(v[11]);
  m.n_classes = as_int(v[12]);
  m.maintainability_index = v[13];
  return m;
}

bool is_integer_feature(std::size_t index) {
  return index == 0 || (index >= 6 && index <= 12);
}

std::int64_t cyclomatic_complexity(std::span<const Token> tokens) {
  std::int64_t cc = 1;
  for (const Token& t : tokens) {
    if (t.kind == TokenKind::Keyword && is_decision_keyword(t.text)) ++cc;
  }
  return cc;
}

HalsteadCounts halstead_counts(std::span<const Token> tokens) {
  std::set<std::string_view> operators;
  std::set<std::string_view> operands;
  HalsteadCounts c;
  for (const Token& t : tokens) {
    switch (t.kind) {
      case TokenKind::Name:
      case TokenKind::Number:
      case TokenKind::String:
        operands.insert(t.text);
        ++c.total_operands;
        break;
      case TokenKind::Keyword:
        if (is_literal_keyword(t.text)) {
          operands.insert(t.text);
          ++c.total_operands;
        } else {
          operators.insert(t.text);
          ++c.total_operators;
        }
        break;
      case TokenKind::Operator:
        if (!is_closing_bracket(t.text)) {
          operators.insert(t.text);
          ++c.total_operators;
        }
        break;
      case TokenKind::Comment:
      case TokenKind::Newline:
        break;
    }
  }
  c.distinct_operators = static_cast<std::int64_t>(operators.size());
  c.distinct_operands = static_cast<std::int64_t>(operands.size());
  return c;
}

HalsteadMeasures derive_halstead(const HalsteadCounts& c) {
  HalsteadMeasures h;
  const auto vocabulary = static_cast<double>(c.distinct_operators + c.distinct_operands);
  const auto length = static_cast<double>(c.total_operators + c.total_operands);
  h.volume = vocabulary > 0 ? length * std::log2(vocabulary) : 0.0;
  h.difficulty = c.distinct_operands > 0
                     ? (static_cast<double>(c.distinct_operators) / 2.0) *
                           (static_cast<double>(c.total_operands) /
                            static_cast<double>(c.distinct_operands))
                     : 0.0;
  h.effort = h.difficulty * h.volume;
  h.time = h.effort / 18.0;
  h.bugs = h.volume / 3000.0;
  return h;
}

StructuralCounts structural_counts(std::string_view source, std::span<const Token> tokens) {
  StructuralCounts s;
  s.n_lines = static_cast<std::int64_t>(count_physical_lines(source));
  for (const Token& t : tokens) {
    if (t.kind == TokenKind::Comment) ++s.n_comments;
  }
  const auto classes = classify_lines(source);
  s.sloc = std::count(classes.begin(), classes.end(), LineClass::Code);
  for (std::size_t head : statement_heads(tokens)) {
    const Token& t = tokens[head];
    if (t.kind != TokenKind::Keyword) continue;
    if (t.text == "class") {
      ++s.n_classes;
    } else if (t.text == "def") {
      ++s.n_functions;
    } else if (t.text == "async") {
      // statement heads only land on `async` for async def/for/with.
      for (std::size_t j = head + 1; j < tokens.size(); ++j) {
        if (tokens[j].kind == TokenKind::Comment) continue;
        if (tokens[j].kind == TokenKind::Keyword && tokens[j].text == "def") ++s.n_functions;
        break;
      }
    }
  }
  return s;
}

double maintainability_index(double volume, std::int64_t total_cc, std::int64_t sloc,
                             double comment_ratio) {
  const double raw = 171.0 - 5.2 * std::log(std::max(1.0, volume)) -
                     0.23 * static_cast<double>(total_cc) -
                     16.2 * std::log(std::max(1.0, static_cast<double>(sloc))) +
                     50.0 * std::sin(std::sqrt(2.4 * comment_ratio));
  return std::clamp(100.0 * raw / 171.0, 0.0, 100.0);
}

MetricVector extract_metrics(std::string_view source) {
  const std::vector<Token> tokens = tokenize(source);
  const HalsteadCounts counts = halstead_counts(tokens);
  const HalsteadMeasures h = derive_halstead(counts);
  const StructuralCounts s = structural_counts(source, tokens);

  MetricVector m;
  m.cyclomatic_complexity = cyclomatic_complexity(tokens);
  m.halstead_difficulty = h.difficulty;
  m.halstead_effort = h.effort;
  m.halstead_volume = h.volume;
  m.halstead_time = h.time;
  m.halstead_bugs = h.bugs;
  m.sloc = s.sloc;
  m.lloc = static_cast<std::int64_t>(count_logical_statements(tokens));
  m.diff_sloc_lloc = m.sloc - m.lloc;
  m.n_lines = s.n_lines;
  m.n_comments = s.n_comments;
  m.n_functions = s.n_functions;
  m.n_classes = s.n_classes;
  const double ratio =
      static_cast<double>(s.n_comments) / static_cast<double>(std::max<std::int64_t>(1, s.n_lines));
  m.maintainability_index = maintainability_index(h.volume, m.cyclomatic_complexity, m.sloc, ratio);
  return m;
}

}  // namespace stylo
