#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "protogen/automata.hpp"
#include "protogen/binding.hpp"

namespace protogen::test {

/// Forward simulation with epsilon closures; the reference for acceptance.
class NfaSimulator {
public:
  explicit NfaSimulator(const Nfa &nfa);

  std::set<StateId> start() const;
  std::set<StateId> step(const std::set<StateId> &from, SymbolId label) const;
  bool accepting(const std::set<StateId> &states) const;
  bool accepts(std::span<const SymbolId> word) const;

private:
  std::set<StateId> closure(std::set<StateId> states) const;

  const Nfa &nfa_;
  std::vector<std::vector<std::pair<SymbolId, StateId>>> adj_;
};

struct LanguageReport {
  std::size_t words = 0;      // words compared (live prefixes included)
  std::size_t accepted = 0;   // words accepted by the oracle
  std::size_t mismatches = 0;
  std::vector<SymbolId> first_mismatch;
};

/// Enumerates every word over the NFA alphabet of length <= max_len and
/// compares oracle acceptance with each DFA. Prefixes on which every
/// automaton is dead are not extended.
LanguageReport compare_languages(const Nfa &nfa,
                                 std::span<const Dfa *const> dfas,
                                 std::size_t max_len);

/// Words of the chain regex (signature keys) of at most max_len symbols,
/// computed by direct expansion of the expression tree.
std::set<std::vector<std::string>> expand_chain(const ChainExpr &expr,
                                                std::size_t max_len);

/// Words (as signature/type keys) of length <= max_len accepted by an NFA.
std::set<std::vector<std::string>> nfa_words(const Nfa &nfa,
                                             std::size_t max_len);

std::string symbol_key(const Symbol &symbol);

/// State count of the trimmed minimal DFA, via forward subset construction
/// and Hopcroft partition refinement.
std::size_t hopcroft_state_count(const Nfa &nfa);

bool has_duplicate_edges(const Dfa &dfa);

} // namespace protogen::test
