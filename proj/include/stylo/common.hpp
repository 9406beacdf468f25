#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace stylo {

/// Authorship label. CHATGPT is the positive class and wins every tie.
enum class Author { ChatGpt = 0, Human = 1 };

inline constexpr std::array<Author, 2> kAuthors = {Author::ChatGpt, Author::Human};

/// Top-level prompt categories of the corpus taxonomy.
enum class Category { ADS = 0, DA, M, OO, VGD };

inline constexpr std::array<Category, 5> kCategories = {
    Category::ADS, Category::DA, Category::M, Category::OO, Category::VGD};

std::string_view to_string(Author a);
std::string_view to_string(Category c);
std::optional<Author> parse_author(std::string_view text);
std::optional<Category> parse_category(std::string_view text);

inline constexpr std::size_t kNumFeatures = 14;

/// Canonical feature order. Every feature index in the project refers to this.
inline constexpr std::array<std::string_view, kNumFeatures> kFeatureNames = {
    "cyclomatic_complexity", "halstead_difficulty", "halstead_effort",
    "halstead_volume",       "halstead_time",       "halstead_bugs",
    "sloc",                  "lloc",                "diff_sloc_lloc",
    "n_lines",               "n_comments",          "n_functions",
    "n_classes",             "maintainability_index"};

// Error hierarchy. The CLI maps each family onto an exit code.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LexError : public Error {
 public:
  LexError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class SchemaMismatch : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

/// Data that cannot support the requested split or fit.
class DegenerateData : public Error {
 public:
  using Error::Error;
};

class EmptyCorpus : public DegenerateData {
 public:
  using DegenerateData::DegenerateData;
};

class DegenerateSplit : public DegenerateData {
 public:
  using DegenerateData::DegenerateData;
};

class DegenerateInput : public DegenerateData {
 public:
  using DegenerateData::DegenerateData;
};

class UnknownCategory : public Error {
 public:
  using Error::Error;
};

class BadK : public UsageError {
 public:
  using UsageError::UsageError;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class WrongModelKind : public UsageError {
 public:
  using UsageError::UsageError;
};

}  // namespace stylo
