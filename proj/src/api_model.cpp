#include "protogen/api_model.hpp"

#include <algorithm>
#include <set>

#include "protogen/diagnostic.hpp"

namespace protogen {

const ClassDef *ApiModel::find_class(const std::string &name) const {
  for (const auto &c : classes)
    if (c.name == name)
      return &c;
  return nullptr;
}

const NodeDef *ApiModel::find_node(const std::string &name) const {
  for (const auto &n : nodes)
    if (n.name == name)
      return &n;
  return nullptr;
}

namespace {

TypeRef param_ref(const std::string &name) {
  TypeRef t;
  t.name = name;
  t.resolution = Resolution::TypeParam;
  return t;
}

TypeRef instantiate(const std::string &name, Resolution resolution,
                    const std::vector<TypeParamDecl> &params) {
  TypeRef t;
  t.name = name;
  t.resolution = resolution;
  for (const auto &p : params)
    t.args.push_back(param_ref(p.name));
  return t;
}

void collect_refs(const TypeRef &type, ParamSet &out) {
  for_each_param_ref(type, [&](const std::string &n) { out.insert(n); });
}

// Adds parameters referenced from the bounds of members until stable.
ParamSet close_over_bounds(ParamSet set, const ClassDecl &cls) {
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto &name : ParamSet(set)) {
      const auto *decl = cls.find_param(name);
      if (!decl)
        continue;
      for (const auto &bound : decl->bounds) {
        ParamSet refs;
        collect_refs(bound, refs);
        for (const auto &r : refs)
          grew = set.insert(r).second || grew;
      }
    }
  }
  return set;
}

// Canonical order: head parameters, then body parameters.
std::vector<TypeParamDecl> ordered(const ParamSet &set, const ClassDecl &cls) {
  std::vector<TypeParamDecl> out;
  for (const auto &p : cls.type_params())
    if (set.contains(p.name))
      out.push_back(p);
  return out;
}

bool has_type_edge(const Dfa &dfa, StateId s) {
  return std::ranges::any_of(dfa.states[s].out, [&](const DfaEdge &e) {
    return dfa.alphabet.symbol(e.label).is_type();
  });
}

std::string simple_name(const std::string &qualified) {
  const auto dot = qualified.rfind('.');
  return dot == std::string::npos ? qualified : qualified.substr(dot + 1);
}

std::string object_key(const TypeRef &type) {
  return type.name + "/" + std::to_string(type.args.size()) + "/" +
         std::to_string(type.array_dims);
}

std::string method_key(const std::string &cls, const MethodSig &sig) {
  return cls + "::" + signature_key(sig);
}

class NameTable {
public:
  std::string claim(const std::string &base) {
    std::string name = base;
    for (int i = 2; taken_.contains(name); ++i)
      name = base + "_" + std::to_string(i);
    taken_.insert(name);
    return name;
  }

private:
  std::set<std::string> taken_;
};

void check_encodable(const AnnotatedDfa &a, const ClassDecl &cls) {
  for (StateId s = 0; s < a.dfa.size(); ++s) {
    std::size_t types = 0;
    std::size_t methods = 0;
    for (const auto &e : a.dfa.states[s].out)
      (a.dfa.alphabet.symbol(e.label).is_type() ? types : methods) += 1;
    if (types > 1 || (types == 1 && methods > 0))
      throw InternalError("class '" + cls.name + "' has a state (" +
                          std::to_string(s) + ") that cannot be encoded");
  }
}

} // namespace

ApiModel build_api_model(const SpecModel &spec, const AnnotatedMap &annotated) {
  ApiModel model;

  auto lookup = [&](const ClassDecl &cls) -> const AnnotatedDfa & {
    auto it = annotated.find(cls.name);
    if (it == annotated.end())
      throw InternalError("no automaton for class '" + cls.name + "'");
    return it->second;
  };

  auto is_state_class = [](const AnnotatedDfa &a, StateId s) {
    return s != a.dfa.initial && !a.dfa.states[s].accepting &&
           !has_type_edge(a.dfa, s);
  };

  std::size_t with_states = 0;
  for (const auto &cls : spec.classes) {
    const auto &a = lookup(cls);
    for (StateId s = 0; s < a.dfa.size(); ++s)
      if (is_state_class(a, s)) {
        ++with_states;
        break;
      }
  }
  const bool prefix = with_states >= 2;

  for (const auto &cls : spec.classes) {
    const auto &a = lookup(cls);
    check_encodable(a, cls);
    const Dfa &dfa = a.dfa;
    if (dfa.states[dfa.initial].accepting || has_type_edge(dfa, dfa.initial))
      throw InternalError("initial state of class '" + cls.name +
                          "' cannot be encoded");

    std::vector<Nfa> chains;
    for (std::size_t i = 0; i < cls.chains.size(); ++i)
      chains.push_back(chain_automaton(cls.chains[i], i));
    const ChainTrace trace = trace_chains(dfa, chains);

    std::vector<std::optional<std::string>> names(dfa.size());
    names[dfa.initial] = cls.name;
    std::size_t next = 1;
    for (StateId s = 0; s < dfa.size(); ++s)
      if (is_state_class(a, s))
        names[s] = (prefix ? cls.name : "") + "State" + std::to_string(next++);

    auto class_params = [&](StateId s) {
      return close_over_bounds(a.bound_params(s), cls);
    };

    for (StateId s = 0; s < dfa.size(); ++s) {
      if (!names[s])
        continue;
      ClassDef def;
      def.name = *names[s];
      def.spec_class = cls.name;
      def.is_initial = s == dfa.initial;
      def.origin_state = s;
      const ParamSet source_params = class_params(s);
      def.type_params = ordered(source_params, cls);

      const auto &out = dfa.states[s].out;
      for (std::size_t slot = 0; slot < out.size(); ++slot) {
        const DfaEdge &edge = out[slot];
        const AlphabetEntry &entry = dfa.alphabet.entry(edge.label);
        const StateId t = edge.target;
        MethodDef m;
        m.signature = entry.symbol.method();
        m.signature.action.reset();
        m.name = m.signature.name;
        m.params = m.signature.params;
        m.source_state = s;
        m.target_state = t;
        m.chains = trace.edge_chains[s][slot];

        // The earliest action among the chains that use this edge.
        for (std::size_t i = 0; i < entry.origins.size(); ++i) {
          const auto &occ = entry.occurrences[i].method();
          if (occ.action && std::ranges::binary_search(m.chains,
                                                       entry.origins[i].chain)) {
            m.signature.action = occ.action;
            break;
          }
        }
        m.is_static = def.is_initial &&
                      std::ranges::any_of(m.chains, [&](std::size_t c) {
                        return cls.chains[c].is_static;
                      });

        ParamSet needed = param_set(entry.symbol);
        for (const auto &e : dfa.states[t].out) {
          const Symbol &sym = dfa.alphabet.symbol(e.label);
          if (sym.is_type())
            m.consumed = sym.type();
        }
        if (m.consumed) {
          m.return_type = *m.consumed;
          collect_refs(*m.consumed, needed);
          const ParamSet bound_t = a.bound_params(t);
          needed.insert(bound_t.begin(), bound_t.end());
        } else {
          if (dfa.states[t].accepting || !names[t])
            throw InternalError("method '" + m.name +
                                "' leads to a state without a class");
          const ParamSet target_params = class_params(t);
          m.return_type =
              instantiate(*names[t], t == dfa.initial ? Resolution::DeclaredClass
                                                      : Resolution::Generated,
                          ordered(target_params, cls));
          needed.insert(target_params.begin(), target_params.end());
        }
        needed = close_over_bounds(std::move(needed), cls);
        if (!m.is_static)
          for (const auto &p : source_params)
            needed.erase(p);
        m.declared_type_params = ordered(needed, cls);
        def.methods.push_back(std::move(m));
      }
      model.classes.push_back(std::move(def));
    }
  }

  std::set<std::string> seen;
  for (const auto &c : model.classes) {
    if (!seen.insert(c.name).second)
      throw InternalError("generated class name '" + c.name +
                          "' is used twice");
    std::set<std::string> sigs;
    for (const auto &m : c.methods)
      if (!sigs.insert(signature_key(m.signature)).second)
        throw InternalError("class '" + c.name + "' declares '" +
                            signature_key(m.signature) + "' twice");
  }
  return model;
}

TreeModel build_tree_model(const SpecModel &spec) {
  TreeModel tree;
  NameTable names;
  std::vector<NodeDef> methods;
  std::vector<NodeDef> objects;
  std::set<std::string> method_keys;
  std::vector<std::string> object_keys;

  for (const auto &cls : spec.classes) {
    for (const auto &chain : cls.chains) {
      std::vector<std::string> chain_nodes;
      for (const MethodSig *sig : method_leaves(chain.expr)) {
        const std::string key = method_key(cls.name, *sig);
        if (method_keys.insert(key).second) {
          NodeDef node;
          node.kind = NodeDef::Kind::Method;
          node.name = names.claim("Method_" + sig->name);
          node.visit_hook = "visit" + node.name;
          node.spec_class = cls.name;
          node.signature = *sig;
          node.signature.action.reset();
          node.fields = sig->params;
          node.type_params =
              ordered(close_over_bounds(param_set(Symbol{*sig}), cls), cls);
          methods.push_back(std::move(node));
        }
        for (const auto &n : methods)
          if (n.spec_class == cls.name &&
              signature_key(n.signature) == signature_key(*sig) &&
              std::ranges::find(chain_nodes, n.name) == chain_nodes.end())
            chain_nodes.push_back(n.name);
      }

      const TypeRef &type = chain.return_type;
      const std::string key = object_key(type);
      auto it = std::ranges::find(object_keys, key);
      if (it == object_keys.end()) {
        NodeDef node;
        node.kind = NodeDef::Kind::Object;
        std::string base = "Object_" + simple_name(type.name);
        for (std::uint32_t d = 0; d < type.array_dims; ++d)
          base += "Array";
        node.name = names.claim(base);
        node.visit_hook = "visit" + node.name;
        node.consumed = type;
        if (type.resolution == Resolution::TypeParam && type.array_dims == 0) {
          node.type_params.push_back({type.name, {}, {}});
        } else {
          std::set<std::string> used;
          for (const auto &arg : type.args)
            if (arg.resolution == Resolution::TypeParam && arg.args.empty() &&
                arg.array_dims == 0)
              used.insert(arg.name);
          std::set<std::string> taken;
          for (std::size_t i = 0; i < type.args.size(); ++i) {
            const auto &arg = type.args[i];
            std::string name;
            if (arg.resolution == Resolution::TypeParam && arg.args.empty() &&
                arg.array_dims == 0 && !taken.contains(arg.name))
              name = arg.name;
            else {
              name = "T" + std::to_string(i + 1);
              while (used.contains(name) || taken.contains(name))
                name += "_";
            }
            taken.insert(name);
            node.type_params.push_back({name, {}, {}});
          }
        }
        objects.push_back(std::move(node));
        object_keys.push_back(key);
        it = object_keys.end() - 1;
      }
      auto &children = objects[static_cast<std::size_t>(it - object_keys.begin())]
                           .children;
      for (const auto &name : chain_nodes)
        if (std::ranges::find(children, name) == children.end())
          children.push_back(name);
    }
  }

  for (auto *list : {&methods, &objects})
    for (auto &node : *list) {
      tree.visitor.hooks.push_back({node.visit_hook, node.name, node.kind});
      tree.nodes.push_back(std::move(node));
    }
  return tree;
}

const NodeDef *find_method_node(const ApiModel &model,
                                const std::string &spec_class,
                                const MethodSig &sig) {
  const std::string key = signature_key(sig);
  for (const auto &n : model.nodes)
    if (n.kind == NodeDef::Kind::Method && n.spec_class == spec_class &&
        signature_key(n.signature) == key)
      return &n;
  return nullptr;
}

const NodeDef *find_object_node(const ApiModel &model, const TypeRef &type) {
  const std::string key = object_key(type);
  for (const auto &n : model.nodes)
    if (n.kind == NodeDef::Kind::Object && object_key(n.consumed) == key)
      return &n;
  return nullptr;
}

ApiModel plan_bodies(ApiModel model, const SpecModel &spec) {
  for (auto &cls : model.classes) {
    const ClassDecl *decl = spec.find_class(cls.spec_class);
    if (!decl)
      throw InternalError("unknown class '" + cls.spec_class + "'");
    for (auto &m : cls.methods) {
      const NodeDef *method_node =
          find_method_node(model, cls.spec_class, m.signature);
      if (!method_node)
        throw InternalError("no method node for '" +
                            signature_key(m.signature) + "'");
      const TypeRef method_ref = instantiate(
          method_node->name, Resolution::Generated, method_node->type_params);
      m.body.action = m.signature.action;

      if (!m.consumed) {
        m.body.plan = StepPlan{method_ref, m.return_type};
        continue;
      }
      const NodeDef *object_node = find_object_node(model, *m.consumed);
      if (!object_node)
        throw InternalError("no object node for '" + to_string(*m.consumed) +
                            "'");
      TerminalPlan plan;
      plan.method_node = method_ref;
      plan.object_node.name = object_node->name;
      plan.object_node.resolution = Resolution::Generated;
      if (m.consumed->resolution == Resolution::TypeParam &&
          m.consumed->array_dims == 0)
        plan.object_node.args.push_back(*m.consumed);
      else
        plan.object_node.args = m.consumed->args;

      for (std::size_t c : m.chains) {
        if (decl->chains.at(c).evaluator) {
          plan.evaluator = decl->chains[c].evaluator;
          break;
        }
      }
      if (plan.evaluator)
        plan.result = TerminalPlan::Result::Evaluator;
      else if (m.consumed->resolution == Resolution::DeclaredClass &&
               m.consumed->array_dims == 0)
        plan.result = TerminalPlan::Result::GeneratedInstance;
      else
        plan.result = TerminalPlan::Result::Unsupported;
      m.body.plan = std::move(plan);
    }
  }
  return model;
}

ApiModel encode(const SpecModel &spec, const AnnotatedMap &annotated) {
  ApiModel model = build_api_model(spec, annotated);
  TreeModel tree = build_tree_model(spec);
  model.nodes = std::move(tree.nodes);
  model.visitor = std::move(tree.visitor);

  // Reserved by the generated runtime: the node base, the visitor and the
  // java.util.List used for node lists.
  std::set<std::string> names{"Node", "List", model.visitor.name};
  for (const auto &c : model.classes)
    if (!names.insert(c.name).second)
      throw InternalError("generated name '" + c.name + "' is used twice");
  for (const auto &n : model.nodes)
    if (!names.insert(n.name).second)
      throw InternalError("generated name '" + n.name + "' is used twice");
  return plan_bodies(std::move(model), spec);
}

// ---- JSON -----------------------------------------------------------------

namespace {

std::string_view resolution_name(Resolution r) {
  switch (r) {
  case Resolution::Unresolved:
    return "unresolved";
  case Resolution::DeclaredClass:
    return "declared";
  case Resolution::TypeParam:
    return "param";
  case Resolution::External:
    return "external";
  case Resolution::Generated:
    return "generated";
  }
  return "?";
}

nlohmann::ordered_json params_json(const std::vector<TypeParamDecl> &params) {
  auto out = nlohmann::ordered_json::array();
  for (const auto &p : params) {
    nlohmann::ordered_json j;
    j["name"] = p.name;
    auto bounds = nlohmann::ordered_json::array();
    for (const auto &b : p.bounds)
      bounds.push_back(to_string(b));
    j["bounds"] = std::move(bounds);
    out.push_back(std::move(j));
  }
  return out;
}

nlohmann::ordered_json fields_json(const std::vector<MethodParam> &params) {
  auto out = nlohmann::ordered_json::array();
  for (const auto &p : params)
    out.push_back({{"type", to_string(p.type)},
                   {"vararg", p.vararg},
                   {"name", p.name}});
  return out;
}

nlohmann::ordered_json body_json(const BodyPlan &body) {
  nlohmann::ordered_json j;
  if (!body.planned()) {
    j["kind"] = "unplanned";
  } else if (!body.is_terminal()) {
    j["kind"] = "step";
    j["method_node"] = to_string(body.step().method_node);
    j["next_state"] = to_string(body.step().next_state);
  } else {
    const auto &t = body.terminal();
    j["kind"] = "terminal";
    j["method_node"] = to_string(t.method_node);
    j["object_node"] = to_string(t.object_node);
    j["result"] = t.result == TerminalPlan::Result::Evaluator ? "evaluator"
                  : t.result == TerminalPlan::Result::GeneratedInstance
                      ? "instance"
                      : "unsupported";
    if (t.evaluator)
      j["evaluator"] = *t.evaluator;
  }
  if (body.action)
    j["action"] = *body.action;
  return j;
}

} // namespace

nlohmann::ordered_json to_json(const TypeRef &type) {
  nlohmann::ordered_json j;
  j["name"] = type.name;
  j["resolution"] = resolution_name(type.resolution);
  auto args = nlohmann::ordered_json::array();
  for (const auto &a : type.args)
    args.push_back(to_json(a));
  j["args"] = std::move(args);
  j["dims"] = type.array_dims;
  return j;
}

nlohmann::ordered_json to_json(const ApiModel &model) {
  nlohmann::ordered_json j;
  auto classes = nlohmann::ordered_json::array();
  for (const auto &c : model.classes) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["spec_class"] = c.spec_class;
    cj["initial"] = c.is_initial;
    cj["origin_state"] = c.origin_state;
    cj["type_params"] = params_json(c.type_params);
    auto methods = nlohmann::ordered_json::array();
    for (const auto &m : c.methods) {
      nlohmann::ordered_json mj;
      mj["name"] = m.name;
      mj["static"] = m.is_static;
      mj["type_params"] = params_json(m.declared_type_params);
      mj["params"] = fields_json(m.params);
      mj["return_type"] = to_string(m.return_type);
      mj["source_state"] = m.source_state;
      mj["target_state"] = m.target_state;
      mj["chains"] = m.chains;
      mj["body"] = body_json(m.body);
      methods.push_back(std::move(mj));
    }
    cj["methods"] = std::move(methods);
    classes.push_back(std::move(cj));
  }
  j["classes"] = std::move(classes);

  auto nodes = nlohmann::ordered_json::array();
  for (const auto &n : model.nodes) {
    nlohmann::ordered_json nj;
    nj["kind"] = n.kind == NodeDef::Kind::Method ? "method" : "object";
    nj["name"] = n.name;
    nj["type_params"] = params_json(n.type_params);
    nj["visit_hook"] = n.visit_hook;
    if (n.kind == NodeDef::Kind::Method) {
      nj["spec_class"] = n.spec_class;
      nj["signature"] = signature_key(n.signature);
      nj["fields"] = fields_json(n.fields);
    } else {
      nj["consumed"] = to_string(n.consumed);
      nj["children"] = n.children;
    }
    nodes.push_back(std::move(nj));
  }
  j["nodes"] = std::move(nodes);

  nlohmann::ordered_json vj;
  vj["name"] = model.visitor.name;
  vj["traversal_helper"] = model.visitor.traversal_helper;
  auto hooks = nlohmann::ordered_json::array();
  for (const auto &h : model.visitor.hooks)
    hooks.push_back({{"name", h.name}, {"node", h.node}});
  vj["hooks"] = std::move(hooks);
  j["visitor"] = std::move(vj);
  return j;
}

} // namespace protogen
