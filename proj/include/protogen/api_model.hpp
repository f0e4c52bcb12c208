#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "protogen/binding.hpp"
#include "protogen/spec_model.hpp"

namespace protogen {

// Language-neutral description of the generated library. Every name is
// unique across classes, nodes and the visitor.

/// Append a fresh method node and hand the list to the next state object.
struct StepPlan {
  TypeRef method_node; // instantiated, e.g. Method_put<K, V>
  TypeRef next_state;  // instantiated target class, e.g. State2<K, V>
};

/// Close the chain: wrap the accumulated nodes into an object node, then
/// produce the consumed type.
struct TerminalPlan {
  enum class Result {
    Evaluator,         // return Evaluator.m(objectNode)
    GeneratedInstance, // return new DeclaredClass<...>(objectNode)
    Unsupported,       // External type and no evaluator: throws at run time
  };

  TypeRef method_node;
  TypeRef object_node; // instantiated, e.g. Object_Map<K, V>
  Result result = Result::Evaluator;
  std::optional<std::string> evaluator;
};

struct BodyPlan {
  std::variant<std::monostate, StepPlan, TerminalPlan> plan;
  std::optional<std::string> action; // called right before returning

  bool planned() const { return plan.index() != 0; }
  bool is_terminal() const { return plan.index() == 2; }
  const StepPlan &step() const { return std::get<StepPlan>(plan); }
  const TerminalPlan &terminal() const { return std::get<TerminalPlan>(plan); }
};

struct MethodDef {
  std::string name;
  bool is_static = false;
  std::vector<TypeParamDecl> declared_type_params;
  std::vector<MethodParam> params;
  TypeRef return_type;
  BodyPlan body;

  // Provenance, used for body planning and diagnostics.
  MethodSig signature;
  StateId source_state = 0;
  StateId target_state = 0;
  std::optional<TypeRef> consumed; // set iff the target consumes a type
  std::vector<std::size_t> chains; // chain declarations using this edge
};

struct ClassDef {
  std::string name;
  std::string spec_class; // declaration this state machine came from
  bool is_initial = false;
  std::vector<TypeParamDecl> type_params;
  std::vector<MethodDef> methods;
  StateId origin_state = 0;
};

struct NodeDef {
  enum class Kind { Method, Object };

  Kind kind = Kind::Method;
  std::string name; // Method_<m> or Object_<T>
  std::vector<TypeParamDecl> type_params;
  std::string visit_hook; // visitMethod_<m> / visitObject_<T>

  // Kind::Method
  std::string spec_class;
  MethodSig signature;
  std::vector<MethodParam> fields;

  // Kind::Object
  TypeRef consumed;                  // first occurrence of the type
  std::vector<std::string> children; // method nodes that can appear below
};

struct VisitorDef {
  struct Hook {
    std::string name;
    std::string node;
    NodeDef::Kind kind = NodeDef::Kind::Method;
  };

  std::string name = "Visitor";
  std::string traversal_helper = "visitChildren";
  std::vector<Hook> hooks;
};

struct ApiModel {
  std::vector<ClassDef> classes;
  std::vector<NodeDef> nodes;
  VisitorDef visitor;

  const ClassDef *find_class(const std::string &name) const;
  const NodeDef *find_node(const std::string &name) const;
};

struct TreeModel {
  std::vector<NodeDef> nodes;
  VisitorDef visitor;
};

using AnnotatedMap = std::map<std::string, AnnotatedDfa>;

/// State classes and chain methods for every declared class. Bodies are left
/// unplanned. Throws InternalError on an automaton validate() would reject.
ApiModel build_api_model(const SpecModel &spec, const AnnotatedMap &annotated);

/// One method node per distinct signature per class, one object node per
/// distinct consumed type (erased), and the visitor covering them.
TreeModel build_tree_model(const SpecModel &spec);

/// Fills every MethodDef body. Requires the tree model to be attached.
ApiModel plan_bodies(ApiModel model, const SpecModel &spec);

/// build_api_model + build_tree_model + plan_bodies.
ApiModel encode(const SpecModel &spec, const AnnotatedMap &annotated);

/// Name of the method node for a signature of a class, or the object node
/// for a consumed type.
const NodeDef *find_method_node(const ApiModel &model,
                                const std::string &spec_class,
                                const MethodSig &sig);
const NodeDef *find_object_node(const ApiModel &model, const TypeRef &type);

/// Canonical JSON (stable field order).
nlohmann::ordered_json to_json(const ApiModel &model);
nlohmann::ordered_json to_json(const TypeRef &type);

} // namespace protogen
