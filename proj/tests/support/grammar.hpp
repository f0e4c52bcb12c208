#pragma once

#include <span>

#include "protogen/frontend.hpp"

namespace protogen::test {

/// Backtracking recognizer for the spec grammar, written independently of
/// the production parser: every nonterminal maps a start position to the
/// set of positions where a derivation can end.
///
///   spec      → class+
///   class     → "class" NAME ("<" hparam ("," hparam)* ">")? "{" stmt* "}"
///   hparam    → NAME ("extends" type ("&" type)*)?
///   stmt      → bparam ";" | chain ";" | chain-ending-in-action
///   bparam    → NAME ("extends" type (("," | "&") type)*)?
///   chain     → "static"? type expr ("return" qual)?
///   expr      → term ("|" term)*
///   term      → fact+
///   fact      → (method | "(" expr ")") ("?" | "*" | "+")?
///   method    → NAME "(" (param ("," param)*)? ")" ("{" qual ";" "}")?
///   param     → type "..."? NAME            (only the last may be a vararg)
///   type      → qual ("<" type ("," type)* ">")? "[]"*
///   qual      → NAME ("." NAME)*
///
/// The `;` after a chain ending in an action block may be omitted when the
/// next token cannot continue the chain (anything but NAME "(" and "(").
bool grammar_accepts(std::span<const Token> tokens);

} // namespace protogen::test
