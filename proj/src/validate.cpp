#include "protogen/validate.hpp"

#include <algorithm>

namespace protogen {
namespace {

std::string join_symbols(const Dfa &dfa, const std::vector<DfaEdge> &edges) {
  std::string out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i)
      out += ", ";
    out += to_string(dfa.alphabet.symbol(edges[i].label));
  }
  return out;
}

class Validator {
public:
  Validator(const AnnotatedDfa &annotated, const ClassDecl &cls)
      : a_(annotated), cls_(cls) {
    for (std::size_t i = 0; i < cls.chains.size(); ++i)
      chains_.push_back(chain_automaton(cls.chains[i], i));
    trace_ = trace_chains(a_.dfa, chains_);
  }

  std::vector<Diagnostic> run() {
    for (StateId s = 0; s < a_.dfa.size(); ++s)
      check_edges(s);
    check_static();
    check_param_names();
    return std::move(diags_);
  }

private:
  void check_edges(StateId s) {
    const auto &out = a_.dfa.states[s].out;
    std::vector<DfaEdge> types;
    std::vector<DfaEdge> methods;
    std::vector<std::size_t> type_chains;
    std::vector<std::size_t> all_chains;
    for (std::size_t slot = 0; slot < out.size(); ++slot) {
      const auto &users = trace_.edge_chains[s][slot];
      all_chains.insert(all_chains.end(), users.begin(), users.end());
      if (a_.dfa.alphabet.symbol(out[slot].label).is_type()) {
        types.push_back(out[slot]);
        type_chains.insert(type_chains.end(), users.begin(), users.end());
      } else {
        methods.push_back(out[slot]);
      }
    }
    const std::string where = "state " + std::to_string(s) + " of class '" +
                              cls_.name + "'";
    if (types.size() >= 2)
      report(DiagCode::MultiTypeEdges, s, type_chains,
             where + " consumes " + std::to_string(types.size()) +
                 " different types (" + join_symbols(a_.dfa, types) +
                 "); chains accepting the same methods must return the "
                 "same type");
    if (!types.empty() && !methods.empty())
      report(DiagCode::MixedEdges, s, all_chains,
             where + " both ends a chain (" + join_symbols(a_.dfa, types) +
                 ") and continues it (" + join_symbols(a_.dfa, methods) +
                 "); a method cannot return both");
  }

  void check_static() {
    const StateId q0 = a_.dfa.initial;
    const auto &out = a_.dfa.states[q0].out;
    for (std::size_t slot = 0; slot < out.size(); ++slot) {
      const auto &users = trace_.edge_chains[q0][slot];
      const bool any_static = std::ranges::any_of(
          users, [&](std::size_t c) { return cls_.chains[c].is_static; });
      const bool any_instance = std::ranges::any_of(
          users, [&](std::size_t c) { return !cls_.chains[c].is_static; });
      if (any_static && any_instance)
        report(DiagCode::StaticConflict, q0, users,
               "method '" + to_string(a_.dfa.alphabet.symbol(out[slot].label)) +
                   "' starts both static and non-static chains of class '" +
                   cls_.name + "'");
    }
  }

  void check_param_names() {
    for (const auto &entry : a_.dfa.alphabet.entries()) {
      if (!entry.symbol.is_method())
        continue;
      const auto &first = entry.symbol.method();
      for (std::size_t i = 1; i < entry.occurrences.size(); ++i) {
        const auto &other = entry.occurrences[i].method();
        bool same = true;
        for (std::size_t p = 0; p < first.params.size(); ++p)
          same = same && first.params[p].name == other.params[p].name;
        if (same)
          continue;
        Diagnostic d;
        d.code = DiagCode::ParamNameMismatch;
        d.severity = Severity::Warning;
        d.pos = entry.origins[i].pos;
        d.class_name = cls_.name;
        d.related.push_back(entry.origins.front().pos);
        d.message = "'" + to_string(other) + "' is merged with '" +
                    to_string(first) + "'; using the parameter names of '" +
                    to_string(first) + "'";
        diags_.push_back(std::move(d));
        break;
      }
    }
  }

  void report(DiagCode code, StateId s, std::vector<std::size_t> chains,
              std::string message) {
    std::ranges::sort(chains);
    chains.erase(std::unique(chains.begin(), chains.end()), chains.end());
    Diagnostic d;
    d.code = code;
    d.class_name = cls_.name;
    d.state = s;
    d.message = std::move(message);
    d.pos = chains.empty() ? cls_.pos : cls_.chains[chains.front()].pos;
    for (std::size_t i = 1; i < chains.size(); ++i)
      d.related.push_back(cls_.chains[chains[i]].pos);
    diags_.push_back(std::move(d));
  }

  const AnnotatedDfa &a_;
  const ClassDecl &cls_;
  std::vector<Nfa> chains_;
  ChainTrace trace_;
  std::vector<Diagnostic> diags_;
};

} // namespace

std::vector<Diagnostic> validate(const AnnotatedDfa &annotated,
                                 const ClassDecl &cls) {
  return Validator(annotated, cls).run();
}

} // namespace protogen
