#pragma once

// Exact membership by reachability over finite configuration graphs. No step
// limits: loops simply never reach an accepting pass move.

#include <cstddef>
#include <string_view>

#include "fla/model.hpp"

namespace fla {

/// Configuration of a forgetting automaton on input w. Positions run from 0
/// (left end-marker) to |w|+1 (right end-marker); cells 1..frozen hold Z.
struct FlaConfiguration {
  State state;
  std::size_t pos;
  std::size_t frozen;
  friend bool operator==(const FlaConfiguration&, const FlaConfiguration&) = default;
};

bool accepts(const OneWayFA& m, std::string_view w);
bool accepts(const TwoWayFA& m, std::string_view w);
/// Requires a valid machine (see validate); throws std::invalid_argument
/// otherwise or when w has a symbol outside the alphabet.
bool accepts(const ForgettingLA& m, std::string_view w);
bool accepts(const Machine& m, std::string_view w);

/// Largest number of distinct moves available from one reachable
/// configuration on input w (pass moves included). A deterministic machine
/// yields at most 1.
std::size_t max_branching(const TwoWayFA& m, std::string_view w);
std::size_t max_branching(const ForgettingLA& m, std::string_view w);

/// True if, on input w, some reachable computation reverses the head
/// direction on a cell that is not an end-marker.
bool reverses_inside(const TwoWayFA& m, std::string_view w);
bool reverses_inside(const ForgettingLA& m, std::string_view w);

}  // namespace fla
