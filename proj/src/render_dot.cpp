#include "protogen/render_java.hpp"

namespace protogen {
namespace {

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out;
}

std::string set_label(const std::optional<ParamSet> &set) {
  if (!set)
    return "?";
  if (set->empty())
    return "∅";
  std::string out = "{";
  bool first = true;
  for (const auto &name : *set) {
    out += (first ? "" : ", ") + name;
    first = false;
  }
  return out + "}";
}

} // namespace

std::string render_dot(const AnnotatedDfa &annotated,
                       std::string_view graph_name) {
  const Dfa &dfa = annotated.dfa;
  std::string out = "digraph " + std::string(graph_name) + " {\n";
  out += "    rankdir=LR;\n";
  out += "    node [shape=circle];\n";
  out += "    __start [shape=point];\n";
  out += "    __start -> s" + std::to_string(dfa.initial) + ";\n";
  for (StateId s = 0; s < dfa.size(); ++s) {
    const auto set =
        s < annotated.bound.size() ? annotated.bound[s] : std::nullopt;
    out += "    s" + std::to_string(s) + " [label=\"" + std::to_string(s) +
           "\\n" + escape(set_label(set)) + "\"";
    if (dfa.states[s].accepting)
      out += ", shape=doublecircle";
    out += "];\n";
  }
  for (StateId s = 0; s < dfa.size(); ++s)
    for (const auto &e : dfa.states[s].out)
      out += "    s" + std::to_string(s) + " -> s" + std::to_string(e.target) +
             " [label=\"" + escape(to_string(dfa.alphabet.symbol(e.label))) +
             "\"];\n";
  out += "}\n";
  return out;
}

} // namespace protogen
