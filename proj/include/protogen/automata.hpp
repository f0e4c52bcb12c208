#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "protogen/spec_model.hpp"

namespace protogen {

using SymbolId = std::uint32_t;
inline constexpr SymbolId kEpsilon = std::numeric_limits<SymbolId>::max();

/// A transition label: a method call or the type a finished chain produces.
struct Symbol {
  std::variant<MethodSig, TypeRef> value;

  bool is_method() const { return value.index() == 0; }
  bool is_type() const { return value.index() == 1; }
  const MethodSig &method() const { return std::get<MethodSig>(value); }
  const TypeRef &type() const { return std::get<TypeRef>(value); }
};

/// Transition equality used throughout determinization: methods with the
/// same name and the same parameter types (names ignored, vararg flags
/// compared), or structurally equal types. Mixed kinds are never equal.
bool symbols_equal(const Symbol &a, const Symbol &b);

std::string to_string(const Symbol &symbol);

struct SymbolOrigin {
  std::size_t chain = 0; // index of the chain within its class
  SourcePos pos;
};

struct AlphabetEntry {
  Symbol symbol; // representative: the first occurrence in document order
  std::vector<SymbolOrigin> origins;
  std::vector<Symbol> occurrences; // parallel to origins
};

/// Symbols interned up to symbols_equal, in first-appearance order.
class Alphabet {
public:
  SymbolId intern(const Symbol &symbol, SymbolOrigin origin);
  std::optional<SymbolId> find(const Symbol &symbol) const;

  const Symbol &symbol(SymbolId id) const { return entries_.at(id).symbol; }
  const AlphabetEntry &entry(SymbolId id) const { return entries_.at(id); }
  std::span<const AlphabetEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

private:
  std::vector<AlphabetEntry> entries_;
};

struct NfaEdge {
  StateId from = 0;
  SymbolId label = kEpsilon;
  StateId to = 0;
};

struct Nfa {
  Alphabet alphabet;
  std::uint32_t state_count = 0;
  StateId initial = 0;
  std::vector<StateId> accepting; // sorted, unique
  std::vector<NfaEdge> edges;

  StateId add_state() { return state_count++; }
  bool is_accepting(StateId s) const;
};

struct DfaEdge {
  SymbolId label = 0;
  StateId target = 0;

  friend bool operator==(const DfaEdge &, const DfaEdge &) = default;
};

struct DfaState {
  bool accepting = false;
  std::vector<DfaEdge> out; // sorted by label

  friend bool operator==(const DfaState &, const DfaState &) = default;
};

/// Partial deterministic automaton: missing edges go to an implicit dead state.
struct Dfa {
  Alphabet alphabet;
  std::vector<DfaState> states;
  StateId initial = 0;

  std::size_t size() const { return states.size(); }
  std::optional<StateId> step(StateId from, SymbolId label) const;
  bool accepts(std::span<const SymbolId> word) const;
};

/// Thompson construction over the chain's regex followed by one transition
/// consuming the return type. The initial state has no incoming edges and
/// the single accepting state has no outgoing edges.
Nfa chain_automaton(const ChainDecl &chain, std::size_t chain_index = 0);

/// Union of chain automata by fusing their initial states and their
/// accepting states. Alphabets are re-interned in input order.
Nfa merge(std::span<const Nfa> automata);

/// Brzozowski minimization: reverse, subset construction, reverse, subset
/// construction. The result is the trimmed minimal DFA with states numbered
/// breadth-first from the initial state, labels visited in alphabet order.
Dfa determinize(const Nfa &nfa);

/// Breadth-first renumbering from the initial state, dropping unreachable
/// states. Returns the old-to-new map (nullopt for dropped states).
std::vector<std::optional<StateId>> renumber_bfs(Dfa &dfa);

/// Which chain declarations pass through each DFA state and edge, found by
/// walking the product of each chain automaton with the DFA.
struct ChainTrace {
  std::vector<std::vector<std::size_t>> state_chains;             // [state]
  std::vector<std::vector<std::vector<std::size_t>>> edge_chains; // [state][slot]
};

ChainTrace trace_chains(const Dfa &dfa, std::span<const Nfa> chain_automata);

} // namespace protogen
