#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace protogen {

using StateId = std::uint32_t;

/// 1-based line/column of a token in the spec source. Line 0 means "unknown".
struct SourcePos {
  std::uint32_t line = 0;
  std::uint32_t column = 0;

  friend bool operator==(const SourcePos &, const SourcePos &) = default;
};

// Source positions never participate in the equality operators below; two
// models are equal when they have the same structure.

enum class Resolution {
  Unresolved,
  DeclaredClass, // a class declared in the spec
  TypeParam,     // a type parameter in scope of the enclosing class
  External,      // anything else; emitted verbatim
  Generated,     // a state class created by the generator (never from input)
};

struct TypeRef {
  std::string name; // dotted qualified name
  std::vector<TypeRef> args;
  std::uint32_t array_dims = 0;
  Resolution resolution = Resolution::Unresolved;
  SourcePos pos;

  bool operator==(const TypeRef &other) const {
    return name == other.name && args == other.args &&
           array_dims == other.array_dims && resolution == other.resolution;
  }
};

struct MethodParam {
  TypeRef type;
  bool vararg = false;
  std::string name;

  bool operator==(const MethodParam &other) const {
    return type == other.type && vararg == other.vararg && name == other.name;
  }
};

struct MethodSig {
  std::string name;
  std::vector<MethodParam> params;
  std::optional<std::string> action; // `{ Qual.name; }`
  SourcePos pos;

  bool operator==(const MethodSig &other) const {
    return name == other.name && params == other.params &&
           action == other.action;
  }
};

struct ChainExpr {
  enum class Kind { Method, Sequence, Alternation, Optional, Star, Plus };

  Kind kind = Kind::Method;
  MethodSig method;              // Kind::Method only
  std::vector<ChainExpr> children; // operands of the operator kinds

  bool operator==(const ChainExpr &other) const {
    return kind == other.kind && method == other.method &&
           children == other.children;
  }

  static ChainExpr leaf(MethodSig m) {
    ChainExpr e;
    e.kind = Kind::Method;
    e.method = std::move(m);
    return e;
  }
  static ChainExpr node(Kind k, std::vector<ChainExpr> children) {
    ChainExpr e;
    e.kind = k;
    e.children = std::move(children);
    return e;
  }
};

struct ChainDecl {
  bool is_static = false;
  TypeRef return_type;
  ChainExpr expr;
  std::optional<std::string> evaluator; // `return Qual.name`
  SourcePos pos;

  bool operator==(const ChainDecl &other) const {
    return is_static == other.is_static && return_type == other.return_type &&
           expr == other.expr && evaluator == other.evaluator;
  }
};

struct TypeParamDecl {
  std::string name;
  std::vector<TypeRef> bounds; // upper bounds only
  SourcePos pos;

  bool operator==(const TypeParamDecl &other) const {
    return name == other.name && bounds == other.bounds;
  }
};

struct ClassDecl {
  std::string name;
  std::vector<TypeParamDecl> head_params;
  std::vector<TypeParamDecl> body_params;
  std::vector<ChainDecl> chains;
  SourcePos pos;

  bool operator==(const ClassDecl &other) const {
    return name == other.name && head_params == other.head_params &&
           body_params == other.body_params && chains == other.chains;
  }

  /// Head parameters first, then body parameters in source order. This is
  /// the canonical order used for every emitted parameter list.
  std::vector<TypeParamDecl> type_params() const;
  const TypeParamDecl *find_param(const std::string &name) const;
};

struct SpecModel {
  std::vector<ClassDecl> classes;

  bool operator==(const SpecModel &other) const {
    return classes == other.classes;
  }

  const ClassDecl *find_class(const std::string &name) const;
};

/// Java-style rendering: `Map<K, V>`, `int[][]`.
std::string to_string(const TypeRef &type);
/// `put(K key, V value)`; varargs as `T... xs`. Actions are not included.
std::string to_string(const MethodSig &method);
/// Canonical signature without parameter names: `put(K,V)`.
std::string signature_key(const MethodSig &method);

/// Calls `fn(name)` for every TypeParam-resolved reference inside `type`,
/// including nested type arguments.
template <typename Fn> void for_each_param_ref(const TypeRef &type, Fn &&fn) {
  if (type.resolution == Resolution::TypeParam)
    fn(type.name);
  for (const auto &arg : type.args)
    for_each_param_ref(arg, fn);
}

/// Method leaves of `expr` in textual order.
std::vector<const MethodSig *> method_leaves(const ChainExpr &expr);

} // namespace protogen
