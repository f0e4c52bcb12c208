#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "protogen/api_model.hpp"
#include "protogen/automata.hpp"
#include "protogen/binding.hpp"
#include "protogen/diagnostic.hpp"
#include "protogen/render_java.hpp"
#include "protogen/spec_model.hpp"

namespace protogen {

struct ClassArtifacts {
  std::string class_name;
  std::vector<Nfa> chain_automata;
  Nfa nfa;
  Dfa dfa;
  AnnotatedDfa annotated;
};

struct CompileOptions {
  bool check_only = false; // stop after validation
  RenderOptions render;
};

struct CompileResult {
  std::optional<SpecModel> spec;
  std::vector<ClassArtifacts> classes; // spec order
  std::vector<Diagnostic> diagnostics;
  std::optional<ApiModel> model;    // set iff generation ran
  std::vector<RenderedFile> files;  // empty unless generation ran

  bool ok() const { return !has_errors(diagnostics); }
  std::string dot() const; // all classes, one digraph each
};

/// Front end, automata, binding analysis and validation for every class;
/// unless check_only (or errors were found), the model and Java files too.
CompileResult compile_spec(std::string_view text,
                           const CompileOptions &options = {});

/// Automata stages for one resolved class.
ClassArtifacts build_class_automata(const ClassDecl &cls);

} // namespace protogen
