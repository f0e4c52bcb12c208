#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "protogen/automata.hpp"
#include "protogen/spec_model.hpp"

namespace protogen {

using ParamSet = std::set<std::string>;

struct CloneEvent {
  StateId origin = 0; // working ids, before the final renumbering
  StateId clone = 0;
  ParamSet origin_set; // set held by the origin at the moment of cloning
  ParamSet clone_set;
};

/// A DFA whose states carry the set of type parameters already bound when
/// the state is reached.
struct AnnotatedDfa {
  Dfa dfa;
  std::vector<std::optional<ParamSet>> bound;
  std::vector<std::optional<StateId>> clone_origin;
  std::vector<CloneEvent> clone_events;

  const ParamSet &bound_params(StateId s) const { return bound.at(s).value(); }
  std::size_t clone_count() const { return clone_events.size(); }
};

/// Type parameters referenced by the parameter types of a method symbol.
/// Empty for type symbols and parameterless methods.
ParamSet param_set(const Symbol &symbol);

/// Adds a copy of `q` (same outgoing edges, same acceptance, no incoming
/// edges, no bound set yet) and returns its id.
StateId clone_state(AnnotatedDfa &annotated, StateId q);

/// Binding-time analysis. FIFO worklist over transitions starting from the
/// initial state, which receives the class's head parameters.
///
/// A method edge q_i -s-> q_j proposes P_i ∪ π(s) for q_j:
///  - unassigned q_j takes it and enqueues its outgoing edges;
///  - a differing set with π(s) = ∅ overwrites q_j without re-enqueueing;
///  - a differing set with π(s) ≠ ∅ redirects the edge to the member of
///    q_j's clone family (origin plus clones) that holds the proposed set,
///    creating and enqueueing a fresh clone when none does.
/// Type edges are skipped; their targets afterwards receive the union of
/// their sources' sets. Unreachable states are dropped and the result is
/// renumbered breadth-first.
AnnotatedDfa analyze(const Dfa &dfa, const ClassDecl &cls);

} // namespace protogen
