#include "protogen/pipeline.hpp"

#include "protogen/frontend.hpp"
#include "protogen/validate.hpp"

namespace protogen {

ClassArtifacts build_class_automata(const ClassDecl &cls) {
  ClassArtifacts out;
  out.class_name = cls.name;
  for (std::size_t i = 0; i < cls.chains.size(); ++i)
    out.chain_automata.push_back(chain_automaton(cls.chains[i], i));
  out.nfa = merge(out.chain_automata);
  out.dfa = determinize(out.nfa);
  out.annotated = analyze(out.dfa, cls);
  return out;
}

CompileResult compile_spec(std::string_view text,
                           const CompileOptions &options) {
  CompileResult result;
  try {
    result.spec = load_spec(text);
  } catch (const SpecError &e) {
    result.diagnostics = e.diagnostics();
    return result;
  }

  AnnotatedMap annotated;
  for (const auto &cls : result.spec->classes) {
    result.classes.push_back(build_class_automata(cls));
    auto diags = validate(result.classes.back().annotated, cls);
    result.diagnostics.insert(result.diagnostics.end(),
                              std::make_move_iterator(diags.begin()),
                              std::make_move_iterator(diags.end()));
    annotated.emplace(cls.name, result.classes.back().annotated);
  }
  if (options.check_only || !result.ok())
    return result;

  result.model = encode(*result.spec, annotated);
  result.files = render(*result.model, options.render);
  return result;
}

std::string CompileResult::dot() const {
  std::string out;
  for (const auto &c : classes)
    out += render_dot(c.annotated, c.class_name);
  return out;
}

} // namespace protogen
