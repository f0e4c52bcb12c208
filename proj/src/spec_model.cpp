#include "protogen/spec_model.hpp"

#include <algorithm>

namespace protogen {

std::vector<TypeParamDecl> ClassDecl::type_params() const {
  std::vector<TypeParamDecl> all = head_params;
  all.insert(all.end(), body_params.begin(), body_params.end());
  return all;
}

const TypeParamDecl *ClassDecl::find_param(const std::string &param) const {
  for (const auto *list : {&head_params, &body_params}) {
    auto it = std::ranges::find(*list, param, &TypeParamDecl::name);
    if (it != list->end())
      return &*it;
  }
  return nullptr;
}

const ClassDecl *SpecModel::find_class(const std::string &name) const {
  auto it = std::ranges::find(classes, name, &ClassDecl::name);
  return it == classes.end() ? nullptr : &*it;
}

std::string to_string(const TypeRef &type) {
  std::string out = type.name;
  if (!type.args.empty()) {
    out += '<';
    for (std::size_t i = 0; i < type.args.size(); ++i) {
      if (i)
        out += ", ";
      out += to_string(type.args[i]);
    }
    out += '>';
  }
  for (std::uint32_t i = 0; i < type.array_dims; ++i)
    out += "[]";
  return out;
}

std::string to_string(const MethodSig &method) {
  std::string out = method.name + "(";
  for (std::size_t i = 0; i < method.params.size(); ++i) {
    const auto &p = method.params[i];
    if (i)
      out += ", ";
    out += to_string(p.type);
    out += p.vararg ? "... " : " ";
    out += p.name;
  }
  return out + ")";
}

std::string signature_key(const MethodSig &method) {
  std::string out = method.name + "(";
  for (std::size_t i = 0; i < method.params.size(); ++i) {
    if (i)
      out += ',';
    out += to_string(method.params[i].type);
    if (method.params[i].vararg)
      out += "...";
  }
  return out + ")";
}

namespace {

void collect_leaves(const ChainExpr &expr, std::vector<const MethodSig *> &out) {
  if (expr.kind == ChainExpr::Kind::Method) {
    out.push_back(&expr.method);
    return;
  }
  for (const auto &child : expr.children)
    collect_leaves(child, out);
}

} // namespace

std::vector<const MethodSig *> method_leaves(const ChainExpr &expr) {
  std::vector<const MethodSig *> out;
  collect_leaves(expr, out);
  return out;
}

} // namespace protogen
