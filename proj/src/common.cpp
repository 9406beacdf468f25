#include "stylo/common.hpp"

namespace stylo {

std::string_view to_string(Author a) {
  return a == Author::ChatGpt ? "CHATGPT" : "HUMAN";
}

std::string_view to_string(Category c) {
  switch (c) {
    case Category::ADS: return "ADS";
    case Category::DA: return "DA";
    case Category::M: return "M";
    case Category::OO: return "OO";
    case Category::VGD: return "VGD";
  }
  return "?";
}

std::optional<Author> parse_author(std::string_view text) {
  if (text == "CHATGPT") return Author::ChatGpt;
  if (text == "HUMAN") return Author::Human;
  return std::nullopt;
}

std::optional<Category> parse_category(std::string_view text) {
  for (Category c : kCategories) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

}  // namespace stylo
