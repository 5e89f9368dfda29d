#include "fla/simulator.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace fla {

namespace {

// Tape of a two-way machine: tape indices for positions 0..|w|+1.
std::vector<std::size_t> two_way_tape(const Alphabet& al, std::string_view w) {
  auto word = al.encode(w);
  std::vector<std::size_t> tape;
  tape.reserve(word.size() + 2);
  tape.push_back(al.left_end_index());
  tape.insert(tape.end(), word.begin(), word.end());
  tape.push_back(al.right_end_index());
  return tape;
}

// Visits all configurations of a two-way finite automaton reachable on w.
// `on_move(state, pos, arrival_dir, move)` sees every move; it returns true
// to stop early.
template <typename OnMove>
void explore_two_way(const TwoWayFA& m, std::string_view w, OnMove&& on_move) {
  const auto tape = two_way_tape(m.alphabet(), w);
  const std::size_t cells = tape.size();
  const std::size_t n = m.num_states();
  // Index: (state * cells + pos) * 2 + (arrival_dir > 0).
  std::vector<char> seen(n * cells * 2, 0);
  std::vector<std::size_t> stack;
  auto push = [&](State q, std::size_t pos, int dir) {
    std::size_t id = (static_cast<std::size_t>(q) * cells + pos) * 2 + (dir > 0);
    if (!seen[id]) {
      seen[id] = 1;
      stack.push_back(id);
    }
  };
  push(m.initial(), 1, kRight);
  while (!stack.empty()) {
    std::size_t id = stack.back();
    stack.pop_back();
    const int dir = (id & 1) ? kRight : kLeft;
    const std::size_t pos = (id / 2) % cells;
    const State q = static_cast<State>(id / 2 / cells);
    for (const auto& mv : m.moves(q, tape[pos])) {
      if (on_move(q, pos, dir, mv)) return;
      if (pos == cells - 1 && mv.move == kRight) continue;  // pass
      if (pos == 0 && mv.move == kLeft) continue;
      push(mv.to, pos + mv.move, mv.move);
    }
  }
}

// Forgetting automaton configurations additionally record how many leading
// cells are frozen. Cell contents follow from (pos, frozen): Z for
// 1..frozen, the input symbol at frozen+1, end-markers at 0 and |w|+1.
template <typename OnMove>
void explore_fla(const ForgettingLA& m, std::string_view w, OnMove&& on_move) {
  const Alphabet& al = m.alphabet();
  const auto word = al.encode(w);
  const std::size_t len = word.size();
  const std::size_t cells = len + 2;
  const std::size_t frozen_values = len + 1;
  const std::size_t n = m.num_states();
  std::vector<char> seen(n * cells * frozen_values * 2, 0);
  std::vector<std::size_t> stack;
  auto encode = [&](State q, std::size_t pos, std::size_t f, int dir) {
    return ((static_cast<std::size_t>(q) * cells + pos) * frozen_values + f) * 2 + (dir > 0);
  };
  auto push = [&](State q, std::size_t pos, std::size_t f, int dir) {
    std::size_t id = encode(q, pos, f, dir);
    if (!seen[id]) {
      seen[id] = 1;
      stack.push_back(id);
    }
  };
  push(m.initial(), 1, 0, kRight);
  while (!stack.empty()) {
    std::size_t id = stack.back();
    stack.pop_back();
    const int dir = (id & 1) ? kRight : kLeft;
    std::size_t rest = id / 2;
    const std::size_t f = rest % frozen_values;
    rest /= frozen_values;
    const std::size_t pos = rest % cells;
    const State q = static_cast<State>(rest / cells);

    std::size_t symbol;
    std::size_t next_f = f;
    if (pos == 0) {
      symbol = al.left_end_index();
    } else if (pos == cells - 1) {
      symbol = al.right_end_index();
    } else if (pos <= f) {
      symbol = al.forget_index();
    } else {
      symbol = word[pos - 1];  // pos == f + 1: first visit
      next_f = pos;
    }
    for (const auto& mv : m.moves(q, symbol)) {
      if (symbol <= al.forget_index() && mv.write != kForget)
        throw std::invalid_argument("not a forgetting automaton: state " + std::to_string(q) +
                                    " rewrites a cell with '" + std::string(1, mv.write) + "'");
      if (on_move(q, pos, dir, symbol, mv)) return;
      if (pos == cells - 1 && mv.move == kRight) continue;  // pass
      if (pos == 0 && mv.move == kLeft) continue;
      push(mv.to, pos + mv.move, next_f, mv.move);
    }
  }
}

}  // namespace

bool accepts(const OneWayFA& m, std::string_view w) {
  const auto word = m.alphabet().encode(w);
  const int n = m.num_states();
  std::vector<char> current(n, 0), next(n, 0);
  current[m.initial()] = 1;
  for (std::size_t a : word) {
    std::fill(next.begin(), next.end(), 0);
    bool any = false;
    for (State q = 0; q < n; ++q) {
      if (!current[q]) continue;
      for (State t : m.targets(q, a)) {
        next[t] = 1;
        any = true;
      }
    }
    if (!any) return false;
    current.swap(next);
  }
  for (State q = 0; q < n; ++q)
    if (current[q] && m.is_final(q)) return true;
  return false;
}

bool accepts(const TwoWayFA& m, std::string_view w) {
  bool accepted = false;
  const std::size_t right_end = w.size() + 1;
  explore_two_way(m, w, [&](State, std::size_t pos, int, const TwoWayMove& mv) {
    if (pos == right_end && mv.move == kRight && m.is_final(mv.to)) accepted = true;
    return accepted;
  });
  return accepted;
}

bool accepts(const ForgettingLA& m, std::string_view w) {
  bool accepted = false;
  const std::size_t right_end = w.size() + 1;
  explore_fla(m, w, [&](State, std::size_t pos, int, std::size_t, const FlaMove& mv) {
    if (pos == right_end && mv.move == kRight && m.is_final(mv.to)) accepted = true;
    return accepted;
  });
  return accepted;
}

bool accepts(const Machine& m, std::string_view w) {
  return std::visit([&](const auto& x) { return accepts(x, w); }, m);
}

std::size_t max_branching(const TwoWayFA& m, std::string_view w) {
  std::size_t best = 0;
  explore_two_way(m, w, [&](State q, std::size_t pos, int, const TwoWayMove&) {
    const auto tape_symbol = pos == 0               ? m.alphabet().left_end_index()
                             : pos == w.size() + 1 ? m.alphabet().right_end_index()
                                                   : *m.alphabet().index_of(w[pos - 1]);
    best = std::max(best, m.moves(q, tape_symbol).size());
    return false;
  });
  return best;
}

std::size_t max_branching(const ForgettingLA& m, std::string_view w) {
  std::size_t best = 0;
  explore_fla(m, w, [&](State q, std::size_t, int, std::size_t symbol, const FlaMove&) {
    best = std::max(best, m.moves(q, symbol).size());
    return false;
  });
  return best;
}

bool reverses_inside(const TwoWayFA& m, std::string_view w) {
  bool reversed = false;
  const std::size_t right_end = w.size() + 1;
  explore_two_way(m, w, [&](State, std::size_t pos, int dir, const TwoWayMove& mv) {
    if (pos != 0 && pos != right_end && mv.move != dir) reversed = true;
    return reversed;
  });
  return reversed;
}

bool reverses_inside(const ForgettingLA& m, std::string_view w) {
  bool reversed = false;
  const std::size_t right_end = w.size() + 1;
  explore_fla(m, w, [&](State, std::size_t pos, int dir, std::size_t, const FlaMove& mv) {
    if (pos != 0 && pos != right_end && mv.move != dir) reversed = true;
    return reversed;
  });
  return reversed;
}

}  // namespace fla
