#include "protogen/frontend.hpp"

namespace protogen {
namespace {

using EK = ChainExpr::Kind;

// Parentheses are emitted wherever the parser would otherwise flatten or
// re-associate, so printing then parsing reproduces the same tree.
void print_expr(const ChainExpr &e, std::string &out);

void print_operand(const ChainExpr &e, bool needs_parens, std::string &out) {
  if (needs_parens)
    out += '(';
  print_expr(e, out);
  if (needs_parens)
    out += ')';
}

void print_method(const MethodSig &m, std::string &out) {
  out += to_string(m);
  if (m.action)
    out += " { " + *m.action + "; }";
}

void print_expr(const ChainExpr &e, std::string &out) {
  switch (e.kind) {
  case EK::Method:
    print_method(e.method, out);
    return;
  case EK::Sequence:
    for (std::size_t i = 0; i < e.children.size(); ++i) {
      if (i)
        out += ' ';
      const auto k = e.children[i].kind;
      print_operand(e.children[i], k == EK::Sequence || k == EK::Alternation,
                    out);
    }
    return;
  case EK::Alternation:
    for (std::size_t i = 0; i < e.children.size(); ++i) {
      if (i)
        out += " | ";
      print_operand(e.children[i], e.children[i].kind == EK::Alternation, out);
    }
    return;
  case EK::Optional:
  case EK::Star:
  case EK::Plus: {
    const auto &child = e.children.front();
    print_operand(child, child.kind != EK::Method, out);
    out += e.kind == EK::Optional ? "?" : e.kind == EK::Star ? "*" : "+";
    return;
  }
  }
}

void print_bounds(const TypeParamDecl &p, std::string_view sep,
                  std::string &out) {
  if (p.bounds.empty())
    return;
  out += " extends ";
  for (std::size_t i = 0; i < p.bounds.size(); ++i) {
    if (i)
      out += sep;
    out += to_string(p.bounds[i]);
  }
}

} // namespace

std::string print_spec(const SpecModel &spec) {
  std::string out;
  for (std::size_t c = 0; c < spec.classes.size(); ++c) {
    const auto &cls = spec.classes[c];
    if (c)
      out += '\n';
    out += "class " + cls.name;
    if (!cls.head_params.empty()) {
      out += '<';
      for (std::size_t i = 0; i < cls.head_params.size(); ++i) {
        if (i)
          out += ", ";
        out += cls.head_params[i].name;
        print_bounds(cls.head_params[i], " & ", out);
      }
      out += '>';
    }
    out += " {\n";
    for (const auto &p : cls.body_params) {
      out += "    " + p.name;
      print_bounds(p, ", ", out);
      out += ";\n";
    }
    for (const auto &chain : cls.chains) {
      out += "    ";
      if (chain.is_static)
        out += "static ";
      out += to_string(chain.return_type) + ' ';
      print_expr(chain.expr, out);
      if (chain.evaluator)
        out += " return " + *chain.evaluator;
      out += ";\n";
    }
    out += "}\n";
  }
  return out;
}

} // namespace protogen
