#include "stylo/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

namespace stylo {

namespace {

constexpr std::array<std::string_view, 35> kKeywords = {
    "False", "None",   "True",    "and",      "as",       "assert", "async",
    "await", "break",  "class",   "continue", "def",      "del",    "elif",
    "else",  "except", "finally", "for",      "from",     "global", "if",
    "import", "in",    "is",      "lambda",   "nonlocal", "not",    "or",
    "pass",  "raise",  "return",  "try",      "while",    "with",   "yield"};

constexpr std::array<std::string_view, 5> kThreeCharOps = {"**=", "//=", ">>=", "<<=", "..."};

constexpr std::array<std::string_view, 19> kTwoCharOps = {
    "->", ":=", "**", "//", ">>", "<<", "<=", ">=", "==", "!=",
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "@="};

constexpr std::string_view kOneCharOps = "+-*/%@&|^~<>()[]{},:.;=";

constexpr std::array<std::string_view, 8> kStringPrefixes = {"r", "u", "b", "f", "br", "rb", "fr", "rf"};

bool is_ident_start(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isalpha(u) || c == '_' || u >= 0x80;
}

bool is_ident_char(char c) {
  return is_ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

bool is_string_prefix(std::string_view word) {
  if (word.size() > 2) return false;
  std::string lower(word);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return std::find(kStringPrefixes.begin(), kStringPrefixes.end(), lower) != kStringPrefixes.end();
}

char closer_for(char open) {
  switch (open) {
    case '(': return ')';
    case '[': return ']';
    default: return '}';
  }
}

class Scanner {
 public:
  explicit Scanner(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    validate_utf8();
    if (src_.starts_with("\xEF\xBB\xBF")) pos_ = 3;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\n' || (c == '\r' && peek(1) == '\n')) {
        newline();
      } else if (c == ' ' || c == '\t' || c == '\f' || c == '\r') {
        ++pos_;
      } else if (c == '#') {
        comment();
      } else if (c == '\\') {
        continuation();
      } else if (c == '\'' || c == '"') {
        string_literal(pos_);
      } else if (is_digit(c) || (c == '.' && is_digit(peek(1)))) {
        number();
      } else if (is_ident_start(c)) {
        word();
      } else {
        op();
      }
    }
    if (!brackets_.empty()) {
      throw LexError(brackets_.back().second,
                     std::string("unclosed '") + brackets_.back().first + "'");
    }
    if (pending_) emit(TokenKind::Newline, pos_, "");
    return std::move(out_);
  }

 private:
  void validate_utf8() const {
    int line = 1;
    std::size_t i = 0;
    while (i < src_.size()) {
      const auto c = static_cast<unsigned char>(src_[i]);
      std::size_t len = 0;
      if (c < 0x80) {
        len = 1;
      } else if ((c & 0xE0) == 0xC0 && c >= 0xC2) {
        len = 2;
      } else if ((c & 0xF0) == 0xE0) {
        len = 3;
      } else if ((c & 0xF8) == 0xF0 && c <= 0xF4) {
        len = 4;
      } else {
        throw LexError(line, "invalid UTF-8");
      }
      if (i + len > src_.size()) throw LexError(line, "invalid UTF-8");
      for (std::size_t k = 1; k < len; ++k) {
        if ((static_cast<unsigned char>(src_[i + k]) & 0xC0) != 0x80) throw LexError(line, "invalid UTF-8");
      }
      if (c == '\n') ++line;
      i += len;
    }
  }

  char peek(std::size_t ahead) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  int col_of(std::size_t at) const { return static_cast<int>(at - line_start_); }

  void emit(TokenKind kind, std::size_t start, std::string text) {
    out_.push_back(Token{kind, std::move(text), line_, col_of(start)});
    if (kind != TokenKind::Comment && kind != TokenKind::Newline) pending_ = true;
  }

  void advance_line(std::size_t next_line_start) {
    ++line_;
    line_start_ = next_line_start;
  }

  void newline() {
    const std::size_t at = pos_;
    pos_ += src_[pos_] == '\r' ? 2 : 1;
    if (brackets_.empty() && pending_) {
      emit(TokenKind::Newline, at, std::string(src_.substr(at, pos_ - at)));
      pending_ = false;
    }
    advance_line(pos_);
  }

  void comment() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
    std::size_t end = pos_;
    if (end > start && src_[end - 1] == '\r') --end;
    out_.push_back(Token{TokenKind::Comment, std::string(src_.substr(start, end - start)), line_,
                         col_of(start)});
  }

  void continuation() {
    if (peek(1) == '\n') {
      pos_ += 2;
    } else if (peek(1) == '\r' && peek(2) == '\n') {
      pos_ += 3;
    } else if (pos_ + 1 >= src_.size()) {
      throw LexError(line_, "unexpected end of file after line continuation");
    } else {
      throw LexError(line_, "unexpected character after line continuation");
    }
    advance_line(pos_);
  }

  // `start` is where the token begins (the prefix, if any); pos_ is at the quote.
  void string_literal(std::size_t start) {
    const int start_line = line_;
    const int start_col = col_of(start);
    const char quote = src_[pos_];
    const bool triple = peek(1) == quote && peek(2) == quote;
    pos_ += triple ? 3 : 1;
    for (;;) {
      if (pos_ >= src_.size()) {
        throw LexError(start_line, triple ? "unterminated triple-quoted string"
                                          : "unterminated string literal");
      }
      const char c = src_[pos_];
      if (c == '\\') {
        if (peek(1) == '\n' || (peek(1) == '\r' && peek(2) == '\n')) {
          pos_ += peek(1) == '\n' ? 2 : 3;
          advance_line(pos_);
        } else {
          pos_ += 2;
        }
        continue;
      }
      if (c == '\n') {
        if (!triple) throw LexError(start_line, "unterminated string literal");
        ++pos_;
        advance_line(pos_);
        continue;
      }
      if (c == quote) {
        if (!triple) {
          ++pos_;
          break;
        }
        if (peek(1) == quote && peek(2) == quote) {
          pos_ += 3;
          break;
        }
      }
      ++pos_;
    }
    pos_ = std::min(pos_, src_.size());
    out_.push_back(Token{TokenKind::String, std::string(src_.substr(start, pos_ - start)),
                         start_line, start_col});
    pending_ = true;
  }

  void number() {
    const std::size_t start = pos_;
    const char x = peek(1);
    if (src_[pos_] == '0' && (x == 'x' || x == 'X' || x == 'o' || x == 'O' || x == 'b' || x == 'B')) {
      pos_ += 2;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
    } else {
      auto digits = [this] {
        while (pos_ < src_.size() && (is_digit(src_[pos_]) || src_[pos_] == '_')) ++pos_;
      };
      digits();
      if (pos_ < src_.size() && src_[pos_] == '.') {
        ++pos_;
        digits();
      }
      if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
        const char s = peek(1);
        if (is_digit(s)) {
          ++pos_;
          digits();
        } else if ((s == '+' || s == '-') && is_digit(peek(2))) {
          pos_ += 2;
          digits();
        }
      }
      if (pos_ < src_.size() && (src_[pos_] == 'j' || src_[pos_] == 'J')) ++pos_;
    }
    emit(TokenKind::Number, start, std::string(src_.substr(start, pos_ - start)));
  }

  void word() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
    const std::string_view text = src_.substr(start, pos_ - start);
    if (pos_ < src_.size() && (src_[pos_] == '\'' || src_[pos_] == '"') && is_string_prefix(text)) {
      string_literal(start);
      return;
    }
    emit(is_keyword(text) ? TokenKind::Keyword : TokenKind::Name, start, std::string(text));
  }

  void op() {
    const std::size_t start = pos_;
    const std::string_view rest = src_.substr(pos_);
    std::size_t len = 0;
    for (auto candidate : kThreeCharOps) {
      if (rest.starts_with(candidate)) len = 3;
    }
    if (len == 0) {
      for (auto candidate : kTwoCharOps) {
        if (rest.starts_with(candidate)) len = 2;
      }
    }
    if (len == 0 && kOneCharOps.find(rest.front()) != std::string_view::npos) len = 1;
    if (len == 0) {
      throw LexError(line_, "unexpected character '" + std::string(1, rest.front()) + "'");
    }
    const char c = rest.front();
    if (len == 1 && (c == '(' || c == '[' || c == '{')) {
      brackets_.emplace_back(c, line_);
    } else if (len == 1 && (c == ')' || c == ']' || c == '}')) {
      if (brackets_.empty() || closer_for(brackets_.back().first) != c) {
        throw LexError(line_, std::string("unmatched '") + c + "'");
      }
      brackets_.pop_back();
    }
    pos_ += len;
    emit(TokenKind::Operator, start, std::string(rest.substr(0, len)));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_start_ = 0;
  int line_ = 1;
  bool pending_ = false;
  std::vector<std::pair<char, int>> brackets_;
  std::vector<Token> out_;
};

bool is_op(const Token& t, std::string_view text) {
  return t.kind == TokenKind::Operator && t.text == text;
}

bool is_kw(const Token& t, std::string_view text) {
  return t.kind == TokenKind::Keyword && t.text == text;
}

int bracket_delta(const Token& t) {
  if (t.kind != TokenKind::Operator || t.text.size() != 1) return 0;
  switch (t.text[0]) {
    case '(': case '[': case '{': return 1;
    case ')': case ']': case '}': return -1;
    default: return 0;
  }
}

bool starts_compound(std::span<const Token> tokens, const std::vector<std::size_t>& idx,
                     std::size_t at) {
  static constexpr std::array<std::string_view, 11> kHeaders = {
      "if", "elif", "else", "for", "while", "try", "except", "finally", "with", "def", "class"};
  const Token& t = tokens[idx[at]];
  if (t.kind != TokenKind::Keyword) return false;
  if (t.text == "async") {
    return at + 1 < idx.size() && (is_kw(tokens[idx[at + 1]], "def") ||
                                   is_kw(tokens[idx[at + 1]], "for") ||
                                   is_kw(tokens[idx[at + 1]], "with"));
  }
  return std::find(kHeaders.begin(), kHeaders.end(), t.text) != kHeaders.end();
}

// Statements of one logical line in [begin, end) of `idx`.
void collect_heads(std::span<const Token> tokens, const std::vector<std::size_t>& idx,
                   std::size_t begin, std::size_t end, std::vector<std::size_t>& heads) {
  std::size_t piece = begin;
  int depth = 0;
  auto flush = [&](std::size_t stop) {
    if (piece >= stop) return;
    heads.push_back(idx[piece]);
    if (starts_compound(tokens, idx, piece)) {
      int d = 0;
      int lambdas = 0;
      for (std::size_t i = piece; i < stop; ++i) {
        const Token& t = tokens[idx[i]];
        d += bracket_delta(t);
        if (d != 0) continue;
        if (is_kw(t, "lambda")) {
          ++lambdas;
        } else if (is_op(t, ":")) {
          if (lambdas > 0) {
            --lambdas;
            continue;
          }
          collect_heads(tokens, idx, i + 1, stop, heads);
          break;
        }
      }
    }
  };
  for (std::size_t i = begin; i < end; ++i) {
    const Token& t = tokens[idx[i]];
    depth += bracket_delta(t);
    if (depth == 0 && is_op(t, ";")) {
      flush(i);
      piece = i + 1;
    }
  }
  flush(end);
}

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Name: return "NAME";
    case TokenKind::Keyword: return "KEYWORD";
    case TokenKind::Number: return "NUMBER";
    case TokenKind::String: return "STRING";
    case TokenKind::Operator: return "OPERATOR";
    case TokenKind::Comment: return "COMMENT";
    case TokenKind::Newline: return "NEWLINE";
  }
  return "?";
}

std::string_view to_string(LineClass c) {
  switch (c) {
    case LineClass::Blank: return "BLANK";
    case LineClass::CommentOnly: return "COMMENT_ONLY";
    case LineClass::Code: return "CODE";
  }
  return "?";
}

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::vector<Token> tokenize(std::string_view source) { return Scanner(source).run(); }

std::string detokenize(std::span<const Token> tokens) {
  std::string out;
  int line = 1;
  int col = 0;
  int depth = 0;
  bool open_line = false;
  for (const Token& t : tokens) {
    while (line < t.line) {
      out += (open_line && depth == 0) ? "\\\n" : "\n";
      ++line;
      col = 0;
    }
    if (col < t.col) {
      out.append(static_cast<std::size_t>(t.col - col), ' ');
      col = t.col;
    }
    out += t.text;
    for (char c : t.text) {
      if (c == '\n') {
        ++line;
        col = 0;
      } else {
        ++col;
      }
    }
    depth += bracket_delta(t);
    if (t.kind == TokenKind::Newline) {
      open_line = false;
    } else if (t.kind != TokenKind::Comment) {
      open_line = true;
    }
  }
  return out;
}

std::size_t count_physical_lines(std::string_view source) {
  if (source.empty()) return 0;
  const auto breaks = static_cast<std::size_t>(std::count(source.begin(), source.end(), '\n'));
  return breaks + (source.back() == '\n' ? 0 : 1);
}

std::vector<LineClass> classify_lines(std::string_view source) {
  enum class State { Normal, Single, Triple };
  std::vector<LineClass> classes;
  State state = State::Normal;
  char quote = '\0';
  std::size_t pos = 0;
  while (pos < source.size()) {
    std::size_t eol = source.find('\n', pos);
    if (eol == std::string_view::npos) eol = source.size();
    const std::string_view line = source.substr(pos, eol - pos);
    const bool starts_in_string = state != State::Normal;

    bool continued = false;  // backslash at end of a single-quoted string line
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char c = line[i];
      if (state == State::Normal) {
        if (c == '#') break;
        if (c == '\'' || c == '"') {
          quote = c;
          if (i + 2 < line.size() && line[i + 1] == c && line[i + 2] == c) {
            state = State::Triple;
            i += 2;
          } else {
            state = State::Single;
          }
        }
      } else if (c == '\\') {
        if (i + 1 >= line.size() || (i + 2 == line.size() && line[i + 1] == '\r')) continued = true;
        ++i;
      } else if (c == quote) {
        if (state == State::Single) {
          state = State::Normal;
        } else if (i + 2 < line.size() && line[i + 1] == quote && line[i + 2] == quote) {
          state = State::Normal;
          i += 2;
        }
      }
    }
    if (state == State::Single && !continued) state = State::Normal;

    const auto first = line.find_first_not_of(" \t\f\r\v");
    if (first == std::string_view::npos) {
      classes.push_back(LineClass::Blank);
    } else if (!starts_in_string && line[first] == '#') {
      classes.push_back(LineClass::CommentOnly);
    } else {
      classes.push_back(LineClass::Code);
    }
    pos = eol + 1;
  }
  return classes;
}

std::vector<std::size_t> statement_heads(std::span<const Token> tokens) {
  std::vector<std::size_t> heads;
  std::vector<std::size_t> logical;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (t.kind == TokenKind::Comment) continue;
    if (t.kind == TokenKind::Newline) {
      collect_heads(tokens, logical, 0, logical.size(), heads);
      logical.clear();
      continue;
    }
    logical.push_back(i);
  }
  collect_heads(tokens, logical, 0, logical.size(), heads);
  return heads;
}

std::size_t count_logical_statements(std::span<const Token> tokens) {
  return statement_heads(tokens).size();
}

}  // namespace stylo
