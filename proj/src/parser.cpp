#include <algorithm>
#include <initializer_list>

#include "protogen/frontend.hpp"

namespace protogen {
namespace {

using Kind = TokenKind;

class Parser {
public:
  explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {}

  SpecModel spec() {
    SpecModel model;
    do {
      model.classes.push_back(class_decl());
    } while (!at_end());
    return model;
  }

private:
  // <class> → "class" NAME <type-param-list>? <class-body>
  ClassDecl class_decl() {
    ClassDecl cls;
    cls.pos = expect(Kind::KwClass).pos;
    cls.name = expect(Kind::Name).text;
    if (accept(Kind::Less)) {
      do {
        cls.head_params.push_back(type_param(/*in_head=*/true));
      } while (accept(Kind::Comma));
      expect(Kind::Greater);
    }
    expect(Kind::LBrace);
    while (!check(Kind::RBrace)) {
      if (is_type_param_statement()) {
        cls.body_params.push_back(type_param(/*in_head=*/false));
      } else if (check(Kind::KwStatic) || check(Kind::Name)) {
        cls.chains.push_back(chain());
        // A chain ending in an action block may omit the `;`.
        if (tokens_[pos_ - 1].kind == Kind::RBrace && !check(Kind::Semicolon))
          continue;
      } else {
        fail({Kind::Name, Kind::KwStatic, Kind::RBrace});
      }
      expect(Kind::Semicolon);
    }
    expect(Kind::RBrace);
    return cls;
  }

  // A statement starting with `NAME ;` or `NAME extends` declares a type
  // parameter; anything else starting with a NAME is a chain.
  bool is_type_param_statement() const {
    return check(Kind::Name) &&
           (check(Kind::Semicolon, 1) || check(Kind::KwExtends, 1));
  }

  // Inside `<...>` a comma separates parameters, so multiple bounds are
  // joined with `&`. Statement form accepts `,` as well.
  TypeParamDecl type_param(bool in_head) {
    TypeParamDecl param;
    const auto &name = expect(Kind::Name);
    param.name = name.text;
    param.pos = name.pos;
    if (accept(Kind::KwExtends)) {
      do {
        param.bounds.push_back(type_ref());
      } while (accept(Kind::Amp) || (!in_head && accept(Kind::Comma)));
    }
    return param;
  }

  // <chain> → "static"? <type-ref> <chain-expr> <tree-eval>?
  ChainDecl chain() {
    ChainDecl decl;
    decl.pos = peek_pos();
    decl.is_static = accept(Kind::KwStatic);
    decl.return_type = type_ref();
    decl.expr = chain_expr();
    if (accept(Kind::KwReturn))
      decl.evaluator = qual_name();
    return decl;
  }

  ChainExpr chain_expr() {
    std::vector<ChainExpr> terms;
    terms.push_back(chain_term());
    while (accept(Kind::Pipe))
      terms.push_back(chain_term());
    if (terms.size() == 1)
      return std::move(terms.front());
    return ChainExpr::node(ChainExpr::Kind::Alternation, std::move(terms));
  }

  ChainExpr chain_term() {
    std::vector<ChainExpr> facts;
    facts.push_back(chain_fact());
    while ((check(Kind::Name) && check(Kind::LParen, 1)) || check(Kind::LParen))
      facts.push_back(chain_fact());
    if (facts.size() == 1)
      return std::move(facts.front());
    return ChainExpr::node(ChainExpr::Kind::Sequence, std::move(facts));
  }

  ChainExpr chain_fact() {
    ChainExpr elem;
    if (accept(Kind::LParen)) {
      elem = chain_expr();
      expect(Kind::RParen);
    } else if (check(Kind::Name)) {
      elem = ChainExpr::leaf(method());
    } else {
      fail({Kind::Name, Kind::LParen});
    }
    auto wrap = [&](ChainExpr::Kind k) {
      std::vector<ChainExpr> child;
      child.push_back(std::move(elem));
      return ChainExpr::node(k, std::move(child));
    };
    if (accept(Kind::Question))
      return wrap(ChainExpr::Kind::Optional);
    if (accept(Kind::Star))
      return wrap(ChainExpr::Kind::Star);
    if (accept(Kind::Plus))
      return wrap(ChainExpr::Kind::Plus);
    return elem;
  }

  // <method> → NAME "(" <method-param-list>? ")" <method-action>?
  MethodSig method() {
    MethodSig sig;
    const auto &name = expect(Kind::Name);
    sig.name = name.text;
    sig.pos = name.pos;
    expect(Kind::LParen);
    if (!check(Kind::RParen)) {
      do {
        const SourcePos at = peek_pos();
        if (!sig.params.empty() && sig.params.back().vararg)
          fail_at(at, "only the last parameter may be a vararg", {Kind::RParen});
        MethodParam param;
        param.type = type_ref();
        param.vararg = accept(Kind::Ellipsis);
        param.name = expect(Kind::Name).text;
        sig.params.push_back(std::move(param));
      } while (accept(Kind::Comma));
    }
    expect(Kind::RParen);
    if (accept(Kind::LBrace)) {
      sig.action = qual_name();
      expect(Kind::Semicolon);
      expect(Kind::RBrace);
    }
    return sig;
  }

  // <type-ref> → <qual-name> ( "<" <type-ref-list> ">" )? "[]"*
  TypeRef type_ref() {
    TypeRef type;
    type.pos = peek_pos();
    type.name = qual_name();
    if (accept(Kind::Less)) {
      do {
        type.args.push_back(type_ref());
      } while (accept(Kind::Comma));
      expect(Kind::Greater);
    }
    while (accept(Kind::ArrayBrackets))
      ++type.array_dims;
    return type;
  }

  std::string qual_name() {
    std::string name = expect(Kind::Name).text;
    while (accept(Kind::Dot))
      name += "." + expect(Kind::Name).text;
    return name;
  }

  bool at_end() const { return pos_ >= tokens_.size(); }

  bool check(Kind kind, std::size_t ahead = 0) const {
    return pos_ + ahead < tokens_.size() && tokens_[pos_ + ahead].kind == kind;
  }

  bool accept(Kind kind) {
    if (!check(kind))
      return false;
    ++pos_;
    return true;
  }

  const Token &expect(Kind kind) {
    if (!check(kind))
      fail({kind});
    return tokens_[pos_++];
  }

  SourcePos peek_pos() const {
    if (!at_end())
      return tokens_[pos_].pos;
    if (tokens_.empty())
      return {1, 1};
    const auto &last = tokens_.back();
    return {last.pos.line,
            last.pos.column + static_cast<std::uint32_t>(last.text.size())};
  }

  [[noreturn]] void fail(std::initializer_list<Kind> expected) const {
    std::string found = at_end() ? "end of input"
                                 : "'" + tokens_[pos_].text + "'";
    fail_at(peek_pos(), "unexpected " + found, expected);
  }

  [[noreturn]] void fail_at(SourcePos at, std::string message,
                            std::initializer_list<Kind> expected) const {
    Diagnostic d;
    d.code = DiagCode::ParseError;
    d.pos = at;
    for (Kind k : expected)
      d.expected.emplace_back(token_kind_name(k));
    message += "; expected ";
    for (std::size_t i = 0; i < d.expected.size(); ++i)
      message += (i ? " or " : "") + d.expected[i];
    d.message = std::move(message);
    throw SpecError({std::move(d)});
  }

  std::span<const Token> tokens_;
  std::size_t pos_ = 0;
};

} // namespace

SpecModel parse_spec(std::span<const Token> tokens) {
  return Parser(tokens).spec();
}

SpecModel load_spec(std::string_view text) {
  const auto tokens = tokenize(text);
  return resolve(parse_spec(tokens));
}

} // namespace protogen
