#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "protogen/diagnostic.hpp"
#include "protogen/spec_model.hpp"

namespace protogen {

enum class TokenKind {
  Name,
  KwClass,
  KwStatic,
  KwExtends,
  KwReturn,
  LBrace,
  RBrace,
  LParen,
  RParen,
  Less,
  Greater,
  Comma,
  Semicolon,
  Dot,
  Ellipsis,
  Pipe,
  Question,
  Star,
  Plus,
  Amp,
  ArrayBrackets, // "[]"
};

struct Token {
  TokenKind kind;
  std::string text;
  SourcePos pos;

  bool operator==(const Token &other) const {
    return kind == other.kind && text == other.text;
  }
};

std::string_view token_kind_name(TokenKind kind);

/// Splits spec text into tokens. `//` comments and whitespace are skipped.
/// Throws SpecError(LEX_ERROR) on a character that starts no token.
std::vector<Token> tokenize(std::string_view text);

/// Recursive-descent parser for the spec language. The result is
/// unresolved: every TypeRef has Resolution::Unresolved.
/// Throws SpecError(PARSE_ERROR) carrying the expected-token set.
SpecModel parse_spec(std::span<const Token> tokens);

/// Binds every TypeRef to a type parameter, a declared class, or External.
/// Throws SpecError with DUPLICATE_CLASS / DUPLICATE_TYPE_PARAM diagnostics.
SpecModel resolve(SpecModel spec);

/// tokenize + parse_spec + resolve.
SpecModel load_spec(std::string_view text);

/// Pretty-prints a model back into spec syntax; parse_spec of the result
/// yields an equal model.
std::string print_spec(const SpecModel &spec);

} // namespace protogen
