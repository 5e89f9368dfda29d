#pragma once

// Textbook one-way automaton algorithms: subset construction, products,
// Moore minimization, reversal and equivalence with counterexamples.

#include <optional>
#include <string>
#include <vector>

#include "fla/model.hpp"

namespace fla {

/// Reachable-subset construction. The result is deterministic and complete;
/// the empty subset appears as a sink only when some subset run dies.
OneWayFA determinize(const OneWayFA& m);

enum class ProductMode { intersect, unite };

/// Full product on n1*n2 states (pair (i, j) is state i*n2 + j). Throws
/// std::invalid_argument when the alphabets differ.
OneWayFA product(const OneWayFA& a, const OneWayFA& b, ProductMode mode = ProductMode::intersect);

/// Deterministic copy in which every (state, symbol) has a move; adds one
/// non-final sink only if needed. Throws for nondeterministic input.
OneWayFA complete(const OneWayFA& dfa);

/// Copy restricted to the states reachable from the initial state, renumbered
/// in breadth-first order (symbols in alphabet order).
OneWayFA reachable_part(const OneWayFA& m);

struct Partition {
  std::vector<int> block;  // block id per state
  int count = 0;
};

/// Coarsest partition of a complete DFA's states into language classes.
Partition moore_partition(const OneWayFA& dfa);

/// Minimal complete DFA, canonically numbered. The input must be
/// deterministic; it is completed first.
OneWayFA minimize(const OneWayFA& dfa);

/// NFA for the reversed language. With several final states a fresh initial
/// state is added carrying the union of their reversed moves.
OneWayFA reverse(const OneWayFA& m);

struct EquivalenceResult {
  bool equivalent = false;
  /// Shortest word accepted by exactly one machine.
  std::optional<std::string> counterexample;
};

EquivalenceResult equivalent(const OneWayFA& a, const OneWayFA& b);

/// Structural isomorphism of two complete DFAs (initial state, finals and
/// labels respected), decided by canonical numbering of reachable states.
/// Throws std::invalid_argument if either machine is not a complete DFA.
bool isomorphic(const OneWayFA& a, const OneWayFA& b);

/// DFA accepting every word; DFA accepting nothing.
OneWayFA universal_dfa(const Alphabet& al);
OneWayFA empty_dfa(const Alphabet& al);

/// Complete DFA with `modulus` states accepting words whose length is
/// congruent to `residue` modulo `modulus`.
OneWayFA length_mod_dfa(const Alphabet& al, int modulus, int residue = 0);

}  // namespace fla
