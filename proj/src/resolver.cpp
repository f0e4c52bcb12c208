#include <map>
#include <set>

#include "protogen/frontend.hpp"

namespace protogen {
namespace {

class Resolver {
public:
  explicit Resolver(const SpecModel &spec) {
    for (const auto &cls : spec.classes)
      class_names_.insert(cls.name);
  }

  void run(SpecModel &spec) {
    std::map<std::string, SourcePos> seen_classes;
    for (auto &cls : spec.classes) {
      if (auto [it, fresh] = seen_classes.emplace(cls.name, cls.pos); !fresh)
        error(DiagCode::DuplicateClass, cls.pos,
              "class '" + cls.name + "' is already declared at " +
                  where(it->second));
      resolve_class(cls);
    }
    if (!diags_.empty())
      throw SpecError(std::move(diags_));
  }

private:
  void resolve_class(ClassDecl &cls) {
    scope_.clear();
    std::map<std::string, SourcePos> seen;
    for (auto *list : {&cls.head_params, &cls.body_params}) {
      for (const auto &p : *list) {
        if (auto [it, fresh] = seen.emplace(p.name, p.pos); !fresh)
          error(DiagCode::DuplicateTypeParam, p.pos,
                "type parameter '" + p.name + "' of class '" + cls.name +
                    "' is already declared at " + where(it->second));
        scope_.insert(p.name);
      }
    }
    for (auto *list : {&cls.head_params, &cls.body_params})
      for (auto &p : *list)
        for (auto &bound : p.bounds)
          resolve_type(bound);
    for (auto &chain : cls.chains) {
      resolve_type(chain.return_type);
      resolve_expr(chain.expr);
    }
  }

  void resolve_expr(ChainExpr &expr) {
    if (expr.kind == ChainExpr::Kind::Method) {
      for (auto &param : expr.method.params)
        resolve_type(param.type);
      return;
    }
    for (auto &child : expr.children)
      resolve_expr(child);
  }

  // Type parameters shadow class names, as in Java.
  void resolve_type(TypeRef &type) {
    if (scope_.contains(type.name))
      type.resolution = Resolution::TypeParam;
    else if (class_names_.contains(type.name))
      type.resolution = Resolution::DeclaredClass;
    else
      type.resolution = Resolution::External;
    for (auto &arg : type.args)
      resolve_type(arg);
  }

  static std::string where(SourcePos p) {
    return std::to_string(p.line) + ":" + std::to_string(p.column);
  }

  void error(DiagCode code, SourcePos pos, std::string message) {
    Diagnostic d;
    d.code = code;
    d.pos = pos;
    d.message = std::move(message);
    diags_.push_back(std::move(d));
  }

  std::set<std::string> class_names_;
  std::set<std::string> scope_;
  std::vector<Diagnostic> diags_;
};

} // namespace

SpecModel resolve(SpecModel spec) {
  Resolver(spec).run(spec);
  return spec;
}

} // namespace protogen
