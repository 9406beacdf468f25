#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stylo/common.hpp"

namespace stylo {

// Lexical layer for the analyzed language (Python 3). Indentation is not
// tracked: no metric depends on block depth, only on where statements start.

enum class TokenKind { Name, Keyword, Number, String, Operator, Comment, Newline };

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string text;
  int line;  // 1-based
  int col;   // 0-based byte column

  bool operator==(const Token&) const = default;
};

enum class LineClass { Blank, CommentOnly, Code };

std::string_view to_string(LineClass c);

bool is_keyword(std::string_view word);

/// Splits source into tokens. A Newline token closes every logical line that
/// holds code; its text is the line break itself, or empty at end of file.
/// Throws LexError on unterminated strings, unbalanced brackets, stray
/// characters, or a dangling line continuation.
std::vector<Token> tokenize(std::string_view source);

/// Rebuilds a source text whose re-tokenization yields `tokens` again.
/// Original spacing is not preserved, positions are.
std::string detokenize(std::span<const Token> tokens);

/// One entry per physical line. Never throws: unterminated constructs are
/// treated as running to end of file.
std::vector<LineClass> classify_lines(std::string_view source);

/// Number of physical lines; a trailing newline does not open a new line.
std::size_t count_physical_lines(std::string_view source);

/// First token of every statement, including compound headers and the
/// statements of inline suites. Indices point into `tokens`.
std::vector<std::size_t> statement_heads(std::span<const Token> tokens);

/// Logical lines of code: one per simple statement, one per compound header.
std::size_t count_logical_statements(std::span<const Token> tokens);

}  // namespace stylo
