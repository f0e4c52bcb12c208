#include "protogen/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace protogen {

bool symbols_equal(const Symbol &a, const Symbol &b) {
  if (a.is_method() != b.is_method())
    return false;
  if (a.is_type())
    return a.type() == b.type();
  const auto &ma = a.method();
  const auto &mb = b.method();
  if (ma.name != mb.name || ma.params.size() != mb.params.size())
    return false;
  for (std::size_t i = 0; i < ma.params.size(); ++i) {
    if (ma.params[i].vararg != mb.params[i].vararg ||
        !(ma.params[i].type == mb.params[i].type))
      return false;
  }
  return true;
}

std::string to_string(const Symbol &symbol) {
  return symbol.is_method() ? to_string(symbol.method())
                            : to_string(symbol.type());
}

SymbolId Alphabet::intern(const Symbol &symbol, SymbolOrigin origin) {
  if (auto id = find(symbol)) {
    entries_[*id].origins.push_back(origin);
    entries_[*id].occurrences.push_back(symbol);
    return *id;
  }
  entries_.push_back({symbol, {origin}, {symbol}});
  return static_cast<SymbolId>(entries_.size() - 1);
}

std::optional<SymbolId> Alphabet::find(const Symbol &symbol) const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (symbols_equal(entries_[i].symbol, symbol))
      return static_cast<SymbolId>(i);
  return std::nullopt;
}

bool Nfa::is_accepting(StateId s) const {
  return std::ranges::binary_search(accepting, s);
}

std::optional<StateId> Dfa::step(StateId from, SymbolId label) const {
  const auto &out = states.at(from).out;
  auto it = std::ranges::lower_bound(out, label, {}, &DfaEdge::label);
  if (it == out.end() || it->label != label)
    return std::nullopt;
  return it->target;
}

bool Dfa::accepts(std::span<const SymbolId> word) const {
  StateId s = initial;
  for (SymbolId label : word) {
    auto next = step(s, label);
    if (!next)
      return false;
    s = *next;
  }
  return states[s].accepting;
}

// ---- chain automata -------------------------------------------------------

namespace {

struct Fragment {
  StateId start;
  StateId end;
};

class ThompsonBuilder {
public:
  ThompsonBuilder(Nfa &nfa, std::size_t chain) : nfa_(nfa), chain_(chain) {}

  Fragment build(const ChainExpr &e) {
    using K = ChainExpr::Kind;
    switch (e.kind) {
    case K::Method: {
      const StateId s = nfa_.add_state();
      const StateId t = nfa_.add_state();
      const SymbolId label =
          nfa_.alphabet.intern(Symbol{e.method}, {chain_, e.method.pos});
      nfa_.edges.push_back({s, label, t});
      return {s, t};
    }
    case K::Sequence: {
      Fragment whole = build(e.children.front());
      for (std::size_t i = 1; i < e.children.size(); ++i) {
        const Fragment next = build(e.children[i]);
        epsilon(whole.end, next.start);
        whole.end = next.end;
      }
      return whole;
    }
    case K::Alternation: {
      const StateId s = nfa_.add_state();
      std::vector<Fragment> parts;
      for (const auto &child : e.children)
        parts.push_back(build(child));
      const StateId t = nfa_.add_state();
      for (const auto &part : parts) {
        epsilon(s, part.start);
        epsilon(part.end, t);
      }
      return {s, t};
    }
    case K::Optional:
    case K::Star:
    case K::Plus: {
      const StateId s = nfa_.add_state();
      const Fragment inner = build(e.children.front());
      const StateId t = nfa_.add_state();
      epsilon(s, inner.start);
      epsilon(inner.end, t);
      if (e.kind != K::Optional)
        epsilon(inner.end, inner.start);
      if (e.kind != K::Plus)
        epsilon(s, t);
      return {s, t};
    }
    }
    return {0, 0};
  }

private:
  void epsilon(StateId from, StateId to) {
    nfa_.edges.push_back({from, kEpsilon, to});
  }

  Nfa &nfa_;
  std::size_t chain_;
};

} // namespace

Nfa chain_automaton(const ChainDecl &chain, std::size_t chain_index) {
  Nfa nfa;
  // The return type is written before the methods, so it is interned first.
  const SymbolId type_label = nfa.alphabet.intern(
      Symbol{chain.return_type}, {chain_index, chain.return_type.pos});
  const Fragment body = ThompsonBuilder(nfa, chain_index).build(chain.expr);
  const StateId accept = nfa.add_state();
  nfa.edges.push_back({body.end, type_label, accept});
  nfa.initial = body.start;
  nfa.accepting = {accept};
  return nfa;
}

Nfa merge(std::span<const Nfa> automata) {
  Nfa merged;
  const StateId initial = merged.add_state();
  const StateId accept = merged.add_state();
  merged.initial = initial;
  merged.accepting = {accept};

  for (const auto &part : automata) {
    std::vector<SymbolId> relabel;
    for (const auto &entry : part.alphabet.entries()) {
      SymbolId id = 0;
      for (std::size_t i = 0; i < entry.origins.size(); ++i)
        id = merged.alphabet.intern(entry.occurrences[i], entry.origins[i]);
      relabel.push_back(id);
    }

    // Fusing is only language-preserving when the initial state has no
    // incoming edges and accepting states have no outgoing edges; otherwise
    // fall back to epsilon links.
    const bool initial_free = std::ranges::none_of(
        part.edges, [&](const NfaEdge &e) { return e.to == part.initial; });
    std::vector<bool> accepting_free(part.state_count, true);
    for (const auto &e : part.edges)
      accepting_free[e.from] = false;

    std::vector<StateId> map(part.state_count);
    for (StateId s = 0; s < part.state_count; ++s) {
      if (s == part.initial && initial_free && !part.is_accepting(s))
        map[s] = initial;
      else if (part.is_accepting(s) && accepting_free[s] && s != part.initial)
        map[s] = accept;
      else
        map[s] = merged.add_state();
    }
    if (map[part.initial] != initial)
      merged.edges.push_back({initial, kEpsilon, map[part.initial]});
    for (StateId s : part.accepting)
      if (map[s] != accept)
        merged.edges.push_back({map[s], kEpsilon, accept});
    for (const auto &e : part.edges)
      merged.edges.push_back(
          {map[e.from], e.label == kEpsilon ? kEpsilon : relabel[e.label],
           map[e.to]});
  }
  return merged;
}

// ---- Brzozowski -----------------------------------------------------------

namespace {

// Working automaton for the double reversal: several initial states allowed.
struct Graph {
  std::size_t size = 0;
  std::vector<StateId> initials;
  std::vector<bool> accepting;
  std::vector<std::vector<std::pair<SymbolId, StateId>>> adj;
};

Graph from_nfa(const Nfa &nfa) {
  Graph g;
  g.size = nfa.state_count;
  g.initials = {nfa.initial};
  g.accepting.assign(g.size, false);
  for (StateId s : nfa.accepting)
    g.accepting[s] = true;
  g.adj.resize(g.size);
  for (const auto &e : nfa.edges)
    g.adj[e.from].emplace_back(e.label, e.to);
  return g;
}

Graph reversed(const Graph &g) {
  Graph r;
  r.size = g.size;
  r.accepting.assign(g.size, false);
  r.adj.resize(g.size);
  for (StateId s = 0; s < g.size; ++s) {
    if (g.accepting[s])
      r.initials.push_back(s);
    for (const auto &[label, t] : g.adj[s])
      r.adj[t].emplace_back(label, s);
  }
  for (StateId s : g.initials)
    r.accepting[s] = true;
  return r;
}

std::vector<StateId> closure(const Graph &g, std::vector<StateId> set) {
  std::vector<bool> seen(g.size, false);
  std::vector<StateId> stack = set;
  for (StateId s : set)
    seen[s] = true;
  while (!stack.empty()) {
    const StateId s = stack.back();
    stack.pop_back();
    for (const auto &[label, t] : g.adj[s]) {
      if (label == kEpsilon && !seen[t]) {
        seen[t] = true;
        set.push_back(t);
        stack.push_back(t);
      }
    }
  }
  std::ranges::sort(set);
  return set;
}

// Accessible subset construction; subsets are discovered breadth-first with
// labels in ascending order, which fixes the numbering.
Graph subset(const Graph &g) {
  Graph d;
  std::map<std::vector<StateId>, StateId> ids;
  std::vector<std::vector<StateId>> sets;
  auto intern = [&](std::vector<StateId> set) {
    auto [it, fresh] = ids.emplace(set, static_cast<StateId>(sets.size()));
    if (fresh)
      sets.push_back(std::move(set));
    return it->second;
  };
  d.initials = {intern(closure(g, g.initials))};
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::map<SymbolId, std::vector<StateId>> moves;
    for (StateId s : sets[i])
      for (const auto &[label, t] : g.adj[s])
        if (label != kEpsilon)
          moves[label].push_back(t);
    std::vector<std::pair<SymbolId, StateId>> out;
    for (auto &[label, targets] : moves) {
      std::ranges::sort(targets);
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      out.emplace_back(label, intern(closure(g, std::move(targets))));
    }
    d.adj.push_back(std::move(out));
  }
  d.size = sets.size();
  d.accepting.resize(d.size);
  for (std::size_t i = 0; i < sets.size(); ++i)
    d.accepting[i] = std::ranges::any_of(
        sets[i], [&](StateId s) { return g.accepting[s]; });
  return d;
}

} // namespace

Dfa determinize(const Nfa &nfa) {
  const Graph g = subset(reversed(subset(reversed(from_nfa(nfa)))));
  Dfa dfa;
  dfa.alphabet = nfa.alphabet;
  dfa.initial = g.initials.front();
  dfa.states.resize(g.size);
  for (StateId s = 0; s < g.size; ++s) {
    dfa.states[s].accepting = g.accepting[s];
    for (const auto &[label, t] : g.adj[s])
      dfa.states[s].out.push_back({label, t});
  }
  renumber_bfs(dfa);
  return dfa;
}

std::vector<std::optional<StateId>> renumber_bfs(Dfa &dfa) {
  std::vector<std::optional<StateId>> map(dfa.states.size());
  std::vector<StateId> order;
  std::deque<StateId> queue{dfa.initial};
  map[dfa.initial] = 0;
  order.push_back(dfa.initial);
  while (!queue.empty()) {
    const StateId s = queue.front();
    queue.pop_front();
    for (const auto &e : dfa.states[s].out) {
      if (!map[e.target]) {
        map[e.target] = static_cast<StateId>(order.size());
        order.push_back(e.target);
        queue.push_back(e.target);
      }
    }
  }
  std::vector<DfaState> states;
  states.reserve(order.size());
  for (StateId old : order) {
    DfaState st = dfa.states[old];
    for (auto &e : st.out)
      e.target = *map[e.target];
    std::ranges::sort(st.out, {}, &DfaEdge::label);
    states.push_back(std::move(st));
  }
  dfa.states = std::move(states);
  dfa.initial = 0;
  return map;
}

// ---- provenance -----------------------------------------------------------

ChainTrace trace_chains(const Dfa &dfa, std::span<const Nfa> chain_automata) {
  const std::size_t n_states = dfa.states.size();
  std::vector<std::vector<bool>> state_hit(n_states);
  std::vector<std::vector<std::vector<bool>>> edge_hit(n_states);
  for (StateId s = 0; s < n_states; ++s) {
    state_hit[s].assign(chain_automata.size(), false);
    edge_hit[s].assign(dfa.states[s].out.size(),
                       std::vector<bool>(chain_automata.size(), false));
  }

  for (std::size_t c = 0; c < chain_automata.size(); ++c) {
    const Nfa &chain = chain_automata[c];
    std::vector<std::optional<SymbolId>> relabel;
    for (const auto &entry : chain.alphabet.entries())
      relabel.push_back(dfa.alphabet.find(entry.symbol));
    std::vector<std::vector<const NfaEdge *>> adj(chain.state_count);
    for (const auto &e : chain.edges)
      adj[e.from].push_back(&e);

    std::vector<bool> seen(std::size_t{chain.state_count} * n_states, false);
    std::deque<std::pair<StateId, StateId>> queue;
    auto visit = [&](StateId q, StateId d) {
      const std::size_t key = std::size_t{q} * n_states + d;
      if (!seen[key]) {
        seen[key] = true;
        queue.emplace_back(q, d);
      }
    };
    visit(chain.initial, dfa.initial);
    while (!queue.empty()) {
      const auto [q, d] = queue.front();
      queue.pop_front();
      state_hit[d][c] = true;
      for (const NfaEdge *e : adj[q]) {
        if (e->label == kEpsilon) {
          visit(e->to, d);
          continue;
        }
        if (!relabel[e->label])
          continue;
        const auto &out = dfa.states[d].out;
        auto it = std::ranges::lower_bound(out, *relabel[e->label], {},
                                           &DfaEdge::label);
        if (it == out.end() || it->label != *relabel[e->label])
          continue;
        edge_hit[d][static_cast<std::size_t>(it - out.begin())][c] = true;
        visit(e->to, it->target);
      }
    }
  }

  auto to_list = [](const std::vector<bool> &flags) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < flags.size(); ++i)
      if (flags[i])
        out.push_back(i);
    return out;
  };
  ChainTrace trace;
  trace.state_chains.resize(n_states);
  trace.edge_chains.resize(n_states);
  for (StateId s = 0; s < n_states; ++s) {
    trace.state_chains[s] = to_list(state_hit[s]);
    for (const auto &flags : edge_hit[s])
      trace.edge_chains[s].push_back(to_list(flags));
  }
  return trace;
}

} // namespace protogen
