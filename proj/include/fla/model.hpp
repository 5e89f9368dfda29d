#pragma once

// Machine descriptions: one-way automata, two-way automata and forgetting
// 1-limited automata over a shared tape-symbol convention.
//
// Tape symbols are the input symbols of the alphabet plus three reserved
// characters: the forgetting symbol 'Z', the left end-marker '<' and the
// right end-marker '>'. Internally every tape symbol has a dense index:
// input symbols take 0..k-1, then Z = k, '<' = k+1, '>' = k+2.
//
// Moving right (+1) from the right end-marker is the "pass" move: it is the
// only way to leave the tape and it accepts iff the target state is final.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fla {

using State = int;

inline constexpr char kForget = 'Z';
inline constexpr char kLeftEnd = '<';
inline constexpr char kRightEnd = '>';

inline constexpr int kLeft = -1;
inline constexpr int kRight = +1;

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string symbols) : symbols_(std::move(symbols)) {}

  std::size_t size() const { return symbols_.size(); }
  char symbol(std::size_t i) const { return symbols_[i]; }
  const std::string& symbols() const { return symbols_; }
  std::optional<std::size_t> index_of(char c) const;
  bool contains(char c) const { return index_of(c).has_value(); }

  /// Number of tape slots: input symbols plus Z and both end-markers.
  std::size_t tape_size() const { return symbols_.size() + 3; }
  std::size_t forget_index() const { return symbols_.size(); }
  std::size_t left_end_index() const { return symbols_.size() + 1; }
  std::size_t right_end_index() const { return symbols_.size() + 2; }
  /// Tape index of `c`; throws std::invalid_argument for unknown characters.
  std::size_t tape_index(char c) const;
  char tape_symbol(std::size_t index) const;

  /// Converts `w` to symbol indices; throws std::invalid_argument naming the
  /// first character outside the alphabet.
  std::vector<std::size_t> encode(std::string_view w) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string symbols_;
};

inline bool is_reserved(char c) {
  return c == kForget || c == kLeftEnd || c == kRightEnd;
}

class OneWayFA {
 public:
  OneWayFA() = default;
  OneWayFA(int num_states, Alphabet alphabet, bool deterministic = false);

  int num_states() const { return static_cast<int>(delta_.size()); }
  const Alphabet& alphabet() const { return alphabet_; }
  bool deterministic() const { return deterministic_; }
  void set_deterministic(bool d) { deterministic_ = d; }

  State initial() const { return initial_; }
  void set_initial(State q) { initial_ = q; }
  bool is_final(State q) const;
  void set_final(State q, bool final = true);
  std::vector<State> finals() const;

  State add_state();
  /// Adds the transition unless present. Targets are kept sorted.
  void add_transition(State from, char symbol, State to);
  void add_transition_index(State from, std::size_t symbol, State to);
  std::span<const State> targets(State from, std::size_t symbol) const {
    return delta_[from][symbol];
  }
  std::size_t transition_count() const;

  friend bool operator==(const OneWayFA&, const OneWayFA&) = default;

 private:
  Alphabet alphabet_;
  bool deterministic_ = false;
  State initial_ = 0;
  std::vector<bool> final_;
  std::vector<std::vector<std::vector<State>>> delta_;
};

struct TwoWayMove {
  State to;
  int move;
  friend auto operator<=>(const TwoWayMove&, const TwoWayMove&) = default;
};

class TwoWayFA {
 public:
  TwoWayFA() = default;
  TwoWayFA(int num_states, Alphabet alphabet, bool deterministic = false,
           bool sweeping = false);

  int num_states() const { return static_cast<int>(delta_.size()); }
  const Alphabet& alphabet() const { return alphabet_; }
  bool deterministic() const { return deterministic_; }
  bool sweeping() const { return sweeping_; }
  void set_sweeping(bool s) { sweeping_ = s; }

  State initial() const { return initial_; }
  void set_initial(State q) { initial_ = q; }
  bool is_final(State q) const;
  void set_final(State q, bool final = true);
  std::vector<State> finals() const;

  State add_state();
  /// `symbol` is an input symbol or one of the end-markers.
  void add_transition(State from, char symbol, State to, int move);
  std::span<const TwoWayMove> moves(State from, std::size_t tape_index) const {
    return delta_[from][tape_index];
  }

  friend bool operator==(const TwoWayFA&, const TwoWayFA&) = default;

 private:
  Alphabet alphabet_;
  bool deterministic_ = false;
  bool sweeping_ = false;
  State initial_ = 0;
  std::vector<bool> final_;
  std::vector<std::vector<std::vector<TwoWayMove>>> delta_;
};

struct FlaMove {
  State to;
  char write;
  int move;
  friend auto operator<=>(const FlaMove&, const FlaMove&) = default;
};

class ForgettingLA {
 public:
  ForgettingLA() = default;
  ForgettingLA(int num_states, Alphabet alphabet, bool deterministic = false);

  int num_states() const { return static_cast<int>(delta_.size()); }
  const Alphabet& alphabet() const { return alphabet_; }
  bool deterministic() const { return deterministic_; }

  State initial() const { return initial_; }
  void set_initial(State q) { initial_ = q; }
  bool is_final(State q) const;
  void set_final(State q, bool final = true);
  std::vector<State> finals() const;

  State add_state();
  void add_transition(State from, char read, State to, char write, int move);
  /// Shorthand for the usual case: input and Z cells are rewritten to Z,
  /// end-markers are left as they are.
  void add_transition(State from, char read, State to, int move);
  std::span<const FlaMove> moves(State from, std::size_t tape_index) const {
    return delta_[from][tape_index];
  }

  friend bool operator==(const ForgettingLA&, const ForgettingLA&) = default;

 private:
  Alphabet alphabet_;
  bool deterministic_ = false;
  State initial_ = 0;
  std::vector<bool> final_;
  std::vector<std::vector<std::vector<FlaMove>>> delta_;
};

using Machine = std::variant<OneWayFA, TwoWayFA, ForgettingLA>;

/// File-format kind: nfa, dfa, 2nfa, 2dfa, fla or dfla.
std::string kind_of(const Machine& m);
int state_count(const Machine& m);

struct Violation {
  std::string where;
  std::string message;
  friend bool operator==(const Violation&, const Violation&) = default;
};

std::vector<Violation> validate(const Alphabet& alphabet);
std::vector<Violation> validate(const OneWayFA& m);
std::vector<Violation> validate(const TwoWayFA& m);
std::vector<Violation> validate(const ForgettingLA& m);
std::vector<Violation> validate(const Machine& m);

std::string to_string(const Violation& v);

}  // namespace fla
