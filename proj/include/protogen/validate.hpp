#pragma once

#include <vector>

#include "protogen/binding.hpp"
#include "protogen/diagnostic.hpp"

namespace protogen {

/// Encodability checks on an annotated DFA:
///   MULTI_TYPE_EDGES  state with two or more type-consuming edges
///   MIXED_EDGES       state with both type- and method-consuming edges
///   STATIC_CONFLICT   initial edge shared by static and instance chains
///   PARAM_NAME_MISMATCH (warning) merged methods with different parameter names
/// An empty result, or warnings only, means the class can be encoded.
std::vector<Diagnostic> validate(const AnnotatedDfa &annotated,
                                 const ClassDecl &cls);

} // namespace protogen
