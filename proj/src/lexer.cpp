#include <cctype>

#include "protogen/frontend.hpp"

namespace protogen {

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
  case TokenKind::Name:
    return "NAME";
  case TokenKind::KwClass:
    return "'class'";
  case TokenKind::KwStatic:
    return "'static'";
  case TokenKind::KwExtends:
    return "'extends'";
  case TokenKind::KwReturn:
    return "'return'";
  case TokenKind::LBrace:
    return "'{'";
  case TokenKind::RBrace:
    return "'}'";
  case TokenKind::LParen:
    return "'('";
  case TokenKind::RParen:
    return "')'";
  case TokenKind::Less:
    return "'<'";
  case TokenKind::Greater:
    return "'>'";
  case TokenKind::Comma:
    return "','";
  case TokenKind::Semicolon:
    return "';'";
  case TokenKind::Dot:
    return "'.'";
  case TokenKind::Ellipsis:
    return "'...'";
  case TokenKind::Pipe:
    return "'|'";
  case TokenKind::Question:
    return "'?'";
  case TokenKind::Star:
    return "'*'";
  case TokenKind::Plus:
    return "'+'";
  case TokenKind::Amp:
    return "'&'";
  case TokenKind::ArrayBrackets:
    return "'[]'";
  }
  return "?";
}

namespace {

bool is_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
bool is_name_char(char c) {
  return is_alpha(c) || (c >= '0' && c <= '9') || c == '_';
}

TokenKind keyword_or_name(std::string_view word) {
  if (word == "class")
    return TokenKind::KwClass;
  if (word == "static")
    return TokenKind::KwStatic;
  if (word == "extends")
    return TokenKind::KwExtends;
  if (word == "return")
    return TokenKind::KwReturn;
  return TokenKind::Name;
}

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (skip_trivia()) {
      const SourcePos start{line_, column_};
      const char c = text_[i_];
      if (is_alpha(c)) {
        std::size_t j = i_;
        while (j < text_.size() && is_name_char(text_[j]))
          ++j;
        std::string word(text_.substr(i_, j - i_));
        tokens.push_back({keyword_or_name(word), std::move(word), start});
        advance(j - i_);
        continue;
      }
      if (text_.substr(i_, 3) == "...") {
        tokens.push_back({TokenKind::Ellipsis, "...", start});
        advance(3);
        continue;
      }
      if (text_.substr(i_, 2) == "[]") {
        tokens.push_back({TokenKind::ArrayBrackets, "[]", start});
        advance(2);
        continue;
      }
      const auto kind = punctuation(c);
      if (!kind)
        fail(start, c);
      tokens.push_back({*kind, std::string(1, c), start});
      advance(1);
    }
    return tokens;
  }

private:
  static std::optional<TokenKind> punctuation(char c) {
    switch (c) {
    case '{':
      return TokenKind::LBrace;
    case '}':
      return TokenKind::RBrace;
    case '(':
      return TokenKind::LParen;
    case ')':
      return TokenKind::RParen;
    case '<':
      return TokenKind::Less;
    case '>':
      return TokenKind::Greater;
    case ',':
      return TokenKind::Comma;
    case ';':
      return TokenKind::Semicolon;
    case '.':
      return TokenKind::Dot;
    case '|':
      return TokenKind::Pipe;
    case '?':
      return TokenKind::Question;
    case '*':
      return TokenKind::Star;
    case '+':
      return TokenKind::Plus;
    case '&':
      return TokenKind::Amp;
    default:
      return std::nullopt;
    }
  }

  [[noreturn]] static void fail(SourcePos pos, char c) {
    Diagnostic d;
    d.code = DiagCode::LexError;
    d.pos = pos;
    const auto byte = static_cast<unsigned char>(c);
    if (std::isprint(byte))
      d.message = std::string("unexpected character '") + c + "'";
    else
      d.message = "unexpected byte 0x" + hex(byte);
    throw SpecError({std::move(d)});
  }

  static std::string hex(unsigned char b) {
    static constexpr char digits[] = "0123456789abcdef";
    return {digits[b >> 4], digits[b & 0xf]};
  }

  // Skips whitespace and `//` comments; false at end of input.
  bool skip_trivia() {
    while (i_ < text_.size()) {
      const char c = text_[i_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f') {
        advance(1);
      } else if (text_.substr(i_, 2) == "//") {
        while (i_ < text_.size() && text_[i_] != '\n')
          advance(1);
      } else {
        return true;
      }
    }
    return false;
  }

  void advance(std::size_t n) {
    for (; n > 0; --n, ++i_) {
      if (text_[i_] == '\n') {
        ++line_;
        column_ = 1;
      } else if ((static_cast<unsigned char>(text_[i_]) & 0xc0) != 0x80) {
        ++column_; // count code points, not continuation bytes
      }
    }
  }

  std::string_view text_;
  std::size_t i_ = 0;
  std::uint32_t line_ = 1;
  std::uint32_t column_ = 1;
};

} // namespace

std::vector<Token> tokenize(std::string_view text) { return Lexer(text).run(); }

} // namespace protogen
