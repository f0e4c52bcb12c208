#include "protogen/binding.hpp"

#include <deque>
#include <map>

#include "protogen/diagnostic.hpp"

namespace protogen {

ParamSet param_set(const Symbol &symbol) {
  ParamSet out;
  if (!symbol.is_method())
    return out;
  for (const auto &param : symbol.method().params)
    for_each_param_ref(param.type,
                       [&](const std::string &name) { out.insert(name); });
  return out;
}

StateId clone_state(AnnotatedDfa &annotated, StateId q) {
  auto &states = annotated.dfa.states;
  const StateId fresh = static_cast<StateId>(states.size());
  DfaState copy = states.at(q);
  states.push_back(std::move(copy));
  annotated.bound.emplace_back();
  annotated.clone_origin.push_back(annotated.clone_origin.at(q).value_or(q));
  return fresh;
}

namespace {

class BindingAnalysis {
public:
  BindingAnalysis(const Dfa &dfa, const ClassDecl &cls) : cls_(cls) {
    a_.dfa = dfa;
    a_.bound.assign(dfa.size(), std::nullopt);
    a_.clone_origin.assign(dfa.size(), std::nullopt);
    const std::size_t n_params = cls.type_params().size();
    max_states_ = dfa.size() << std::min<std::size_t>(n_params, 32);
  }

  AnnotatedDfa run() {
    const StateId q0 = a_.dfa.initial;
    ParamSet head;
    for (const auto &p : cls_.head_params)
      head.insert(p.name);
    a_.bound[q0] = head;
    enqueue_out(q0);

    while (!queue_.empty()) {
      const auto [qi, slot] = queue_.front();
      queue_.pop_front();
      const DfaEdge edge = a_.dfa.states[qi].out[slot];
      const Symbol &s = a_.dfa.alphabet.symbol(edge.label);
      if (!s.is_method())
        continue;
      const ParamSet pi = param_set(s);
      ParamSet proposed = *a_.bound[qi];
      proposed.insert(pi.begin(), pi.end());
      const StateId qj = edge.target;

      if (!a_.bound[qj]) {
        a_.bound[qj] = std::move(proposed);
        enqueue_out(qj);
      } else if (*a_.bound[qj] == proposed) {
        // nothing to do
      } else if (pi.empty()) {
        a_.bound[qj] = std::move(proposed);
      } else if (auto reuse = family_member_with(qj, proposed)) {
        a_.dfa.states[qi].out[slot].target = *reuse;
      } else {
        const StateId fresh = clone_state(a_, qj);
        if (a_.dfa.size() > max_states_)
          throw InternalError("binding analysis exceeded its state bound");
        a_.clone_events.push_back({qj, fresh, *a_.bound[qj], proposed});
        a_.bound[fresh] = std::move(proposed);
        a_.dfa.states[qi].out[slot].target = fresh;
        family(a_.clone_origin[fresh].value()).push_back(fresh);
        enqueue_out(fresh);
      }
    }

    const auto map = renumber_bfs(a_.dfa);
    std::vector<std::optional<ParamSet>> bound(a_.dfa.size());
    std::vector<std::optional<StateId>> origin(a_.dfa.size());
    for (StateId old = 0; old < map.size(); ++old) {
      if (!map[old])
        continue;
      bound[*map[old]] = std::move(a_.bound[old]);
      if (a_.clone_origin[old])
        origin[*map[old]] = map[*a_.clone_origin[old]];
    }
    a_.bound = std::move(bound);
    a_.clone_origin = std::move(origin);

    // Type edges are not followed by the worklist; their targets receive
    // the union of all sources.
    std::map<StateId, ParamSet> type_targets;
    for (StateId s = 0; s < a_.dfa.size(); ++s)
      for (const auto &e : a_.dfa.states[s].out)
        if (a_.dfa.alphabet.symbol(e.label).is_type() && a_.bound[s])
          type_targets[e.target].insert(a_.bound[s]->begin(),
                                        a_.bound[s]->end());
    for (auto &[target, set] : type_targets)
      a_.bound[target] = std::move(set);

    for (const auto &set : a_.bound)
      if (!set)
        throw InternalError("binding analysis left a reachable state unset");
    return std::move(a_);
  }

private:
  void enqueue_out(StateId q) {
    for (std::size_t slot = 0; slot < a_.dfa.states[q].out.size(); ++slot)
      queue_.emplace_back(q, slot);
  }

  std::vector<StateId> &family(StateId origin) {
    auto &members = families_[origin];
    if (members.empty())
      members.push_back(origin);
    return members;
  }

  std::optional<StateId> family_member_with(StateId q, const ParamSet &set) {
    for (StateId member : family(a_.clone_origin[q].value_or(q)))
      if (a_.bound[member] && *a_.bound[member] == set)
        return member;
    return std::nullopt;
  }

  const ClassDecl &cls_;
  AnnotatedDfa a_;
  std::deque<std::pair<StateId, std::size_t>> queue_;
  std::map<StateId, std::vector<StateId>> families_;
  std::size_t max_states_ = 0;
};

} // namespace

AnnotatedDfa analyze(const Dfa &dfa, const ClassDecl &cls) {
  return BindingAnalysis(dfa, cls).run();
}

} // namespace protogen
