#pragma once

// Transition tables of forgetting automata and the conversions to one-way
// automata built on them.
//
// tau_m relates p to q when the machine, started in p on the rightmost cell
// of the frozen tape prefix "<Z^m" (on '<' itself for m = 0), can leave that
// prefix to the right in state q. Because frozen cells all hold Z, the table
// depends on m only, and the sequence tau_0, tau_1, ... is ultimately
// periodic.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fla/model.hpp"

namespace fla {

/// Bit set over at most 64 states.
using StateMask = std::uint64_t;

std::vector<State> states_of(StateMask mask);

class TransitionTable {
 public:
  TransitionTable() = default;
  /// Empty relation on n states; throws std::invalid_argument for n > 64.
  explicit TransitionTable(int n);

  int size() const { return static_cast<int>(rows_.size()); }
  bool get(State p, State q) const { return (rows_[p] >> q) & 1u; }
  void set(State p, State q) { rows_[p] |= StateMask{1} << q; }
  StateMask row(State p) const { return rows_[p]; }
  /// Union of the rows of every state in `from`.
  StateMask image(StateMask from) const;
  bool empty() const;

  friend bool operator==(const TransitionTable&, const TransitionTable&) = default;
  friend bool operator<(const TransitionTable& a, const TransitionTable& b) { return a.rows_ < b.rows_; }

 private:
  std::vector<StateMask> rows_;
};

struct TableSequence {
  std::vector<TransitionTable> tables;  // tau_0 .. tau_{rho+lambda-1}
  std::size_t rho = 0;
  std::size_t lambda = 1;

  /// Position of tau_m in `tables`.
  std::size_t index_of(std::size_t m) const;
  /// Position of tau_{m+1} given the position of tau_m.
  std::size_t successor(std::size_t index) const;
  const TransitionTable& table(std::size_t m) const { return tables[index_of(m)]; }
};

/// tau_{seg_len} by reachability over (state, position) on "<Z^seg_len".
TransitionTable compute_table(const ForgettingLA& m, std::size_t seg_len);

/// tau_{k+1} from tau_k: closure at the new rightmost Z cell, with every left
/// excursion resolved through tau_k.
TransitionTable extend_table(const ForgettingLA& m, const TransitionTable& tau);

/// States in which the head first enters cell m+2 when cell m+1 holds input
/// symbol `a`, is entered in q, and tau = tau_m. Throws std::invalid_argument
/// if `a` is not an input symbol.
std::vector<State> entry_step(const ForgettingLA& m, const TransitionTable& tau, State q, char a);
StateMask entry_mask(const ForgettingLA& m, const TransitionTable& tau, State q, std::size_t a);

/// Whether, from q on the right end-marker with tau = tau_{|w|}, the machine
/// can perform the pass move into a final state.
bool accept_closure(const ForgettingLA& m, const TransitionTable& tau, State q);

/// Exact first repeat of the table sequence. Throws std::logic_error if no
/// repeat shows up within 5n^2 + F(n) + 2 steps, which the theory rules out.
TableSequence detect_period(const ForgettingLA& m);

/// NFA on pairs (table index, state), reachable part only.
OneWayFA fla_to_nfa(const ForgettingLA& m);
/// Complete DFA on pairs (table index, nonempty state set) plus one sink.
OneWayFA fla_to_dfa(const ForgettingLA& m);
/// Complete DFA on pairs (table index, state) for a deterministic machine,
/// with a dead state only when some run blocks. Throws std::invalid_argument
/// for nondeterministic machines.
OneWayFA dfla_to_dfa(const ForgettingLA& m);

/// Upper bounds on the conversion sizes: n(5n^2+F(n))+1,
/// (2^n-1)(5n^2+F(n))+2 and n(n+F(n))+2.
std::uint64_t nfa_conversion_bound(int n);
std::uint64_t dfa_conversion_bound(int n);
std::uint64_t dfla_conversion_bound(int n);

}  // namespace fla
