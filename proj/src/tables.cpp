#include "fla/tables.hpp"

#include <bit>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "fla/numtheory.hpp"

namespace fla {

namespace {

constexpr StateMask bit(State q) { return StateMask{1} << q; }

void require_small(const ForgettingLA& m) {
  if (m.num_states() > 64)
    throw std::invalid_argument("transition tables support at most 64 states, machine has " +
                                std::to_string(m.num_states()));
}

// Closure at a cell holding `symbol` whose left neighbour ends a frozen
// prefix described by tau. `pending` are states sitting on the cell; returns
// the states that step off it to the right.
StateMask close_at_cell(const ForgettingLA& m, const TransitionTable& tau, std::size_t symbol,
                        StateMask pending) {
  StateMask seen = pending, exits = 0;
  while (pending) {
    const State s = std::countr_zero(pending);
    pending &= pending - 1;
    for (const auto& mv : m.moves(s, symbol)) {
      if (mv.move == kRight) {
        exits |= bit(mv.to);
      } else {
        const StateMask back = tau.row(mv.to) & ~seen;
        seen |= back;
        pending |= back;
      }
    }
  }
  return exits;
}

}  // namespace

std::vector<State> states_of(StateMask mask) {
  std::vector<State> out;
  for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

TransitionTable::TransitionTable(int n) {
  if (n < 0 || n > 64) throw std::invalid_argument("transition tables support at most 64 states");
  rows_.assign(n, 0);
}

StateMask TransitionTable::image(StateMask from) const {
  StateMask out = 0;
  for (; from; from &= from - 1) out |= rows_[std::countr_zero(from)];
  return out;
}

bool TransitionTable::empty() const {
  for (auto r : rows_)
    if (r) return false;
  return true;
}

std::size_t TableSequence::index_of(std::size_t m) const {
  if (m < rho) return m;
  return rho + (m - rho) % lambda;
}

std::size_t TableSequence::successor(std::size_t index) const {
  return index + 1 < tables.size() ? index + 1 : rho;
}

TransitionTable compute_table(const ForgettingLA& m, std::size_t seg_len) {
  require_small(m);
  const int n = m.num_states();
  const Alphabet& al = m.alphabet();
  TransitionTable out(n);
  const std::size_t cells = seg_len + 1;  // positions 0 (the '<') .. seg_len
  for (State p = 0; p < n; ++p) {
    std::vector<char> seen(static_cast<std::size_t>(n) * cells, 0);
    std::vector<std::pair<State, std::size_t>> stack{{p, seg_len}};
    seen[static_cast<std::size_t>(p) * cells + seg_len] = 1;
    while (!stack.empty()) {
      auto [q, pos] = stack.back();
      stack.pop_back();
      const std::size_t symbol = pos == 0 ? al.left_end_index() : al.forget_index();
      for (const auto& mv : m.moves(q, symbol)) {
        if (mv.move == kRight && pos == seg_len) {
          out.set(p, mv.to);
          continue;
        }
        if (mv.move == kLeft && pos == 0) continue;
        const std::size_t next = pos + mv.move;
        auto& flag = seen[static_cast<std::size_t>(mv.to) * cells + next];
        if (!flag) {
          flag = 1;
          stack.push_back({mv.to, next});
        }
      }
    }
  }
  return out;
}

TransitionTable extend_table(const ForgettingLA& m, const TransitionTable& tau) {
  require_small(m);
  const int n = m.num_states();
  TransitionTable out(n);
  for (State p = 0; p < n; ++p)
    for (State q : states_of(close_at_cell(m, tau, m.alphabet().forget_index(), bit(p))))
      out.set(p, q);
  return out;
}

StateMask entry_mask(const ForgettingLA& m, const TransitionTable& tau, State q, std::size_t a) {
  if (a >= m.alphabet().size()) throw std::invalid_argument("entry_step: not an input symbol");
  // The first move rewrites the cell; afterwards it reads Z.
  StateMask exits = 0, returned = 0;
  for (const auto& mv : m.moves(q, a)) {
    if (mv.move == kRight)
      exits |= bit(mv.to);
    else
      returned |= tau.row(mv.to);
  }
  return exits | close_at_cell(m, tau, m.alphabet().forget_index(), returned);
}

std::vector<State> entry_step(const ForgettingLA& m, const TransitionTable& tau, State q, char a) {
  auto idx = m.alphabet().index_of(a);
  if (!idx) throw std::invalid_argument(std::string("entry_step: '") + a + "' is not an input symbol");
  return states_of(entry_mask(m, tau, q, *idx));
}

bool accept_closure(const ForgettingLA& m, const TransitionTable& tau, State q) {
  const StateMask passes = close_at_cell(m, tau, m.alphabet().right_end_index(), bit(q));
  for (State t : states_of(passes))
    if (m.is_final(t)) return true;
  return false;
}

TableSequence detect_period(const ForgettingLA& m) {
  require_small(m);
  const auto n = static_cast<std::uint64_t>(m.num_states());
  const std::uint64_t cap = 5 * n * n + landau(static_cast<unsigned>(std::max<std::uint64_t>(n, 1))).value + 2;
  TableSequence seq;
  std::map<TransitionTable, std::size_t> first;
  TransitionTable cur = compute_table(m, 0);
  for (std::uint64_t step = 0; step <= cap; ++step) {
    auto [it, fresh] = first.emplace(cur, seq.tables.size());
    if (!fresh) {
      seq.rho = it->second;
      seq.lambda = seq.tables.size() - it->second;
      return seq;
    }
    seq.tables.push_back(cur);
    cur = extend_table(m, cur);
  }
  throw std::logic_error("detect_period: no repeat within " + std::to_string(cap) +
                         " tables; this contradicts the periodicity bound");
}

OneWayFA fla_to_nfa(const ForgettingLA& m) {
  const TableSequence seq = detect_period(m);
  const int n = m.num_states();
  const std::size_t k = m.alphabet().size();
  std::unordered_map<std::size_t, State> id;  // index * n + q
  std::vector<std::pair<std::size_t, State>> states;
  auto intern = [&](std::size_t i, State q) {
    auto [it, fresh] = id.emplace(i * n + q, static_cast<State>(states.size()));
    if (fresh) states.push_back({i, q});
    return it->second;
  };
  intern(0, m.initial());
  std::vector<std::vector<std::vector<State>>> delta;
  for (std::size_t s = 0; s < states.size(); ++s) {
    auto [i, q] = states[s];
    const std::size_t next = seq.successor(i);
    delta.emplace_back(k);
    for (std::size_t a = 0; a < k; ++a)
      for (State t : states_of(entry_mask(m, seq.tables[i], q, a))) delta[s][a].push_back(intern(next, t));
  }
  OneWayFA out(static_cast<int>(states.size()), m.alphabet(), false);
  out.set_initial(0);
  for (std::size_t s = 0; s < states.size(); ++s) {
    auto [i, q] = states[s];
    if (accept_closure(m, seq.tables[i], q)) out.set_final(static_cast<State>(s));
    for (std::size_t a = 0; a < k; ++a)
      for (State t : delta[s][a]) out.add_transition_index(static_cast<State>(s), a, t);
  }
  return out;
}

OneWayFA fla_to_dfa(const ForgettingLA& m) {
  const TableSequence seq = detect_period(m);
  const std::size_t k = m.alphabet().size();
  std::map<std::pair<std::size_t, StateMask>, State> id;
  std::vector<std::pair<std::size_t, StateMask>> states;
  constexpr State kSink = 0;
  states.push_back({0, 0});  // every empty set collapses here
  auto intern = [&](std::size_t i, StateMask s) -> State {
    if (s == 0) return kSink;
    auto [it, fresh] = id.emplace(std::pair{i, s}, static_cast<State>(states.size()));
    if (fresh) states.push_back({i, s});
    return it->second;
  };
  const State start = intern(0, bit(m.initial()));
  std::vector<std::vector<State>> delta(1, std::vector<State>(k, kSink));
  for (std::size_t s = 1; s < states.size(); ++s) {
    auto [i, set] = states[s];
    const std::size_t next = seq.successor(i);
    delta.emplace_back(k);
    for (std::size_t a = 0; a < k; ++a) {
      StateMask to = 0;
      for (State q : states_of(set)) to |= entry_mask(m, seq.tables[i], q, a);
      delta[s][a] = intern(next, to);
    }
  }
  // The sink is only kept when reachable.
  bool sink_used = false;
  for (std::size_t s = 1; s < states.size(); ++s)
    for (State t : delta[s]) sink_used |= t == kSink;
  const int shift = sink_used ? 0 : 1;
  OneWayFA out(static_cast<int>(states.size()) - shift, m.alphabet(), true);
  out.set_initial(start - shift);
  for (std::size_t s = shift; s < states.size(); ++s) {
    auto [i, set] = states[s];
    const State me = static_cast<State>(s) - shift;
    for (State q : states_of(set))
      if (accept_closure(m, seq.tables[i], q)) {
        out.set_final(me);
        break;
      }
    for (std::size_t a = 0; a < k; ++a) out.add_transition_index(me, a, delta[s][a] - shift);
  }
  return out;
}

OneWayFA dfla_to_dfa(const ForgettingLA& m) {
  if (!m.deterministic()) throw std::invalid_argument("dfla_to_dfa: machine is not marked deterministic");
  for (State q = 0; q < m.num_states(); ++q)
    for (std::size_t t = 0; t < m.alphabet().tape_size(); ++t)
      if (m.moves(q, t).size() > 1)
        throw std::invalid_argument("dfla_to_dfa: state " + std::to_string(q) + " has several moves on '" +
                                    std::string(1, m.alphabet().tape_symbol(t)) + "'");
  OneWayFA nfa = fla_to_nfa(m);
  bool blocked = false;
  for (State s = 0; s < nfa.num_states(); ++s)
    for (std::size_t a = 0; a < nfa.alphabet().size(); ++a) {
      const auto n = nfa.targets(s, a).size();
      if (n > 1) throw std::logic_error("dfla_to_dfa: deterministic machine produced a branching entry step");
      blocked |= n == 0;
    }
  nfa.set_deterministic(true);
  if (!blocked) return nfa;
  const State dead = nfa.add_state();
  for (State s = 0; s < nfa.num_states(); ++s)
    for (std::size_t a = 0; a < nfa.alphabet().size(); ++a)
      if (nfa.targets(s, a).empty()) nfa.add_transition_index(s, a, dead);
  return nfa;
}

namespace {

std::uint64_t saturate(unsigned __int128 v) {
  constexpr auto max = std::numeric_limits<std::uint64_t>::max();
  return v > max ? max : static_cast<std::uint64_t>(v);
}

}  // namespace

std::uint64_t nfa_conversion_bound(int n) {
  const unsigned __int128 nn = static_cast<unsigned>(n);
  return saturate(nn * (5 * nn * nn + landau(static_cast<unsigned>(n)).value) + 1);
}

std::uint64_t dfa_conversion_bound(int n) {
  const unsigned __int128 nn = static_cast<unsigned>(n);
  if (n >= 60) return std::numeric_limits<std::uint64_t>::max();
  const unsigned __int128 subsets = (static_cast<unsigned __int128>(1) << n) - 1;
  return saturate(subsets * (5 * nn * nn + landau(static_cast<unsigned>(n)).value) + 2);
}

std::uint64_t dfla_conversion_bound(int n) {
  const unsigned __int128 nn = static_cast<unsigned>(n);
  return saturate(nn * (nn + landau(static_cast<unsigned>(n)).value) + 2);
}

}  // namespace fla
