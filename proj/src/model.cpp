#include "fla/model.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fla {

namespace {

template <typename T>
void insert_sorted(std::vector<T>& v, const T& x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) v.insert(it, x);
}

std::string quote(char c) { return std::string("'") + c + "'"; }

std::string direction_name(int move) {
  if (move == kLeft) return "-1";
  if (move == kRight) return "+1";
  return std::to_string(move);
}

void check_state_flags(int num_states, State initial, std::vector<Violation>& out) {
  if (num_states == 0) {
    out.push_back({"states", "machine has no states"});
    return;
  }
  if (initial < 0 || initial >= num_states)
    out.push_back({"initial", "initial state " + std::to_string(initial) + " out of range"});
}

void check_target(int num_states, State to, const std::string& where,
                  std::vector<Violation>& out) {
  if (to < 0 || to >= num_states)
    out.push_back({where, "target state " + std::to_string(to) + " out of range"});
}

// Sweeping check for two-way machines: every state gets the direction in
// which the head arrived when the machine is in it. A move that lands in q
// fixes dir(q); a move from p on a non-end-marker cell must keep dir(p).
// The initial state counts as having arrived moving right. Pass moves are
// ignored since they leave the tape.
template <typename Moves>
void check_sweeping(int n, State initial, const Alphabet& alphabet, Moves&& moves_of,
                    std::vector<Violation>& out) {
  std::vector<int> dir(n, 0);
  if (initial >= 0 && initial < n) dir[initial] = kRight;
  auto assign = [&](State q, int d, const std::string& where) {
    if (q < 0 || q >= n) return;
    if (dir[q] == 0) {
      dir[q] = d;
    } else if (dir[q] != d) {
      out.push_back({where, "state " + std::to_string(q) +
                                " is entered moving in both directions; machine is not sweeping"});
      dir[q] = 2;  // poisoned, report once
    }
  };
  const std::size_t right_end = alphabet.right_end_index();
  const std::size_t left_end = alphabet.left_end_index();
  // Target constraints do not depend on dir, so one pass suffices for them.
  for (State p = 0; p < n; ++p) {
    for (std::size_t t = 0; t < alphabet.tape_size(); ++t) {
      for (const auto& mv : moves_of(p, t)) {
        if (t == right_end && mv.move == kRight) continue;
        assign(mv.to, mv.move, "state " + std::to_string(mv.to));
      }
    }
  }
  for (State p = 0; p < n; ++p) {
    for (std::size_t t = 0; t < alphabet.tape_size(); ++t) {
      if (t == left_end || t == right_end) continue;
      for (const auto& mv : moves_of(p, t)) {
        if (dir[p] == 0 || dir[p] == 2) continue;
        if (mv.move != dir[p]) {
          out.push_back({"transition (" + std::to_string(p) + ", " +
                             quote(alphabet.tape_symbol(t)) + ")",
                         "head reverses direction away from the end-markers"});
        }
      }
    }
  }
}

}  // namespace

std::optional<std::size_t> Alphabet::index_of(char c) const {
  auto pos = symbols_.find(c);
  if (pos == std::string::npos) return std::nullopt;
  return pos;
}

std::size_t Alphabet::tape_index(char c) const {
  if (auto i = index_of(c)) return *i;
  switch (c) {
    case kForget: return forget_index();
    case kLeftEnd: return left_end_index();
    case kRightEnd: return right_end_index();
    default: throw std::invalid_argument("unknown tape symbol " + quote(c));
  }
}

char Alphabet::tape_symbol(std::size_t index) const {
  if (index < symbols_.size()) return symbols_[index];
  if (index == forget_index()) return kForget;
  if (index == left_end_index()) return kLeftEnd;
  if (index == right_end_index()) return kRightEnd;
  throw std::out_of_range("tape index out of range");
}

std::vector<std::size_t> Alphabet::encode(std::string_view w) const {
  std::vector<std::size_t> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto idx = index_of(w[i]);
    if (!idx)
      throw std::invalid_argument("symbol " + quote(w[i]) + " at position " +
                                  std::to_string(i) + " is not in the alphabet");
    out.push_back(*idx);
  }
  return out;
}

// ---------------------------------------------------------------- OneWayFA

OneWayFA::OneWayFA(int num_states, Alphabet alphabet, bool deterministic)
    : alphabet_(std::move(alphabet)),
      deterministic_(deterministic),
      final_(num_states, false),
      delta_(num_states, std::vector<std::vector<State>>(alphabet_.size())) {}

bool OneWayFA::is_final(State q) const { return final_.at(q); }
void OneWayFA::set_final(State q, bool final) { final_.at(q) = final; }

std::vector<State> OneWayFA::finals() const {
  std::vector<State> out;
  for (State q = 0; q < num_states(); ++q)
    if (final_[q]) out.push_back(q);
  return out;
}

State OneWayFA::add_state() {
  final_.push_back(false);
  delta_.emplace_back(alphabet_.size());
  return num_states() - 1;
}

void OneWayFA::add_transition(State from, char symbol, State to) {
  auto idx = alphabet_.index_of(symbol);
  if (!idx) throw std::invalid_argument("symbol " + quote(symbol) + " is not in the alphabet");
  add_transition_index(from, *idx, to);
}

void OneWayFA::add_transition_index(State from, std::size_t symbol, State to) {
  insert_sorted(delta_.at(from).at(symbol), to);
}

std::size_t OneWayFA::transition_count() const {
  std::size_t total = 0;
  for (const auto& row : delta_)
    for (const auto& cell : row) total += cell.size();
  return total;
}

// ---------------------------------------------------------------- TwoWayFA

TwoWayFA::TwoWayFA(int num_states, Alphabet alphabet, bool deterministic, bool sweeping)
    : alphabet_(std::move(alphabet)),
      deterministic_(deterministic),
      sweeping_(sweeping),
      final_(num_states, false),
      delta_(num_states, std::vector<std::vector<TwoWayMove>>(alphabet_.tape_size())) {}

bool TwoWayFA::is_final(State q) const { return final_.at(q); }
void TwoWayFA::set_final(State q, bool final) { final_.at(q) = final; }

std::vector<State> TwoWayFA::finals() const {
  std::vector<State> out;
  for (State q = 0; q < num_states(); ++q)
    if (final_[q]) out.push_back(q);
  return out;
}

State TwoWayFA::add_state() {
  final_.push_back(false);
  delta_.emplace_back(alphabet_.tape_size());
  return num_states() - 1;
}

void TwoWayFA::add_transition(State from, char symbol, State to, int move) {
  insert_sorted(delta_.at(from).at(alphabet_.tape_index(symbol)), TwoWayMove{to, move});
}

// ------------------------------------------------------------ ForgettingLA

ForgettingLA::ForgettingLA(int num_states, Alphabet alphabet, bool deterministic)
    : alphabet_(std::move(alphabet)),
      deterministic_(deterministic),
      final_(num_states, false),
      delta_(num_states, std::vector<std::vector<FlaMove>>(alphabet_.tape_size())) {}

bool ForgettingLA::is_final(State q) const { return final_.at(q); }
void ForgettingLA::set_final(State q, bool final) { final_.at(q) = final; }

std::vector<State> ForgettingLA::finals() const {
  std::vector<State> out;
  for (State q = 0; q < num_states(); ++q)
    if (final_[q]) out.push_back(q);
  return out;
}

State ForgettingLA::add_state() {
  final_.push_back(false);
  delta_.emplace_back(alphabet_.tape_size());
  return num_states() - 1;
}

void ForgettingLA::add_transition(State from, char read, State to, char write, int move) {
  insert_sorted(delta_.at(from).at(alphabet_.tape_index(read)), FlaMove{to, write, move});
}

void ForgettingLA::add_transition(State from, char read, State to, int move) {
  const char write = (read == kLeftEnd || read == kRightEnd) ? read : kForget;
  add_transition(from, read, to, write, move);
}

// ---------------------------------------------------------------- helpers

std::string kind_of(const Machine& m) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, OneWayFA>) return x.deterministic() ? "dfa" : "nfa";
        else if constexpr (std::is_same_v<T, TwoWayFA>) return x.deterministic() ? "2dfa" : "2nfa";
        else return x.deterministic() ? "dfla" : "fla";
      },
      m);
}

int state_count(const Machine& m) {
  return std::visit([](const auto& x) { return x.num_states(); }, m);
}

std::string to_string(const Violation& v) { return v.where + ": " + v.message; }

// ---------------------------------------------------------------- validate

std::vector<Violation> validate(const Alphabet& alphabet) {
  std::vector<Violation> out;
  const auto& s = alphabet.symbols();
  if (s.empty()) out.push_back({"alphabet", "input alphabet is empty"});
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (is_reserved(s[i]))
      out.push_back({"alphabet", "reserved symbol " + quote(s[i]) + " used as input symbol"});
    if (s.find(s[i]) != i)
      out.push_back({"alphabet", "duplicate symbol " + quote(s[i])});
    if (static_cast<unsigned char>(s[i]) < 0x21 || static_cast<unsigned char>(s[i]) > 0x7e)
      out.push_back({"alphabet", "symbol at position " + std::to_string(i) + " is not printable"});
  }
  return out;
}

std::vector<Violation> validate(const OneWayFA& m) {
  auto out = validate(m.alphabet());
  check_state_flags(m.num_states(), m.initial(), out);
  for (State p = 0; p < m.num_states(); ++p) {
    for (std::size_t a = 0; a < m.alphabet().size(); ++a) {
      const std::string where =
          "transition (" + std::to_string(p) + ", " + quote(m.alphabet().symbol(a)) + ")";
      auto targets = m.targets(p, a);
      for (State q : targets) check_target(m.num_states(), q, where, out);
      if (m.deterministic() && targets.size() > 1)
        out.push_back({where, "deterministic machine has " + std::to_string(targets.size()) +
                                  " transitions"});
    }
  }
  return out;
}

namespace {

template <typename Machine2, typename Check>
void check_two_way_common(const Machine2& m, bool has_forget_cells, Check&& extra,
                          std::vector<Violation>& out) {
  const Alphabet& al = m.alphabet();
  for (State p = 0; p < m.num_states(); ++p) {
    for (std::size_t t = 0; t < al.tape_size(); ++t) {
      const char read = al.tape_symbol(t);
      const std::string where = "transition (" + std::to_string(p) + ", " + quote(read) + ")";
      auto moves = m.moves(p, t);
      if (m.deterministic() && moves.size() > 1)
        out.push_back({where, "deterministic machine has " + std::to_string(moves.size()) +
                                  " transitions"});
      for (const auto& mv : moves) {
        const std::string at = where + " -> " + std::to_string(mv.to) + " " +
                               direction_name(mv.move);
        check_target(m.num_states(), mv.to, at, out);
        if (mv.move != kLeft && mv.move != kRight)
          out.push_back({at, "direction must be -1 or +1"});
        if (t == al.left_end_index() && mv.move == kLeft)
          out.push_back({at, "moves left from the left end-marker"});
        if (t == al.forget_index() && !has_forget_cells)
          out.push_back({at, "two-way automata have no transitions on Z"});
        extra(t, mv, at);
      }
    }
  }
}

}  // namespace

std::vector<Violation> validate(const TwoWayFA& m) {
  auto out = validate(m.alphabet());
  check_state_flags(m.num_states(), m.initial(), out);
  check_two_way_common(m, false, [](std::size_t, const TwoWayMove&, const std::string&) {}, out);
  if (m.sweeping() && m.num_states() > 0)
    check_sweeping(m.num_states(), m.initial(), m.alphabet(),
                   [&](State p, std::size_t t) { return m.moves(p, t); }, out);
  return out;
}

std::vector<Violation> validate(const ForgettingLA& m) {
  auto out = validate(m.alphabet());
  check_state_flags(m.num_states(), m.initial(), out);
  const Alphabet& al = m.alphabet();
  check_two_way_common(
      m, true,
      [&](std::size_t t, const FlaMove& mv, const std::string& at) {
        if (t < al.size() && mv.write != kForget)
          out.push_back({at, "input symbol rewritten to " + quote(mv.write) +
                                 "; forgetting automata must write Z on first visit"});
        else if (t == al.forget_index() && mv.write != kForget)
          out.push_back({at, "frozen cell rewritten to " + quote(mv.write)});
        else if ((t == al.left_end_index() || t == al.right_end_index()) &&
                 mv.write != al.tape_symbol(t))
          out.push_back({at, "end-marker rewritten to " + quote(mv.write)});
      },
      out);
  return out;
}

std::vector<Violation> validate(const Machine& m) {
  return std::visit([](const auto& x) { return validate(x); }, m);
}

}  // namespace fla
