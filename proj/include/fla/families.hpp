#pragma once

// Builders for the witness machines, over the alphabet {a, b}.
//
// Every builder throws std::invalid_argument on parameters outside its
// domain. The *_states functions give the exact number of states the
// corresponding builder produces.

#include <cstdint>
#include <string>
#include <vector>

#include "fla/model.hpp"

namespace fla {

const Alphabet& binary_alphabet();

/// Meyer-Fischer NFA: a cycles q_i -> q_{i+1 mod n}; b keeps q_i (i >= 1)
/// or jumps to q_0; q_0 has no b move. q_0 is initial and final. n >= 2.
OneWayFA build_mf(int n);

/// Complete DFA on (nonempty subset, length mod ell) plus one sink.
OneWayFA build_Lnl_dfa(int n, std::uint64_t ell);
/// Meyer-Fischer NFA times a length counter modulo ell.
OneWayFA build_Lnl_nfa(int n, std::uint64_t ell);
/// Sweeping 2NFA: one nondeterministic sweep for the Meyer-Fischer part,
/// then one sweep per prime power of ell.
TwoWayFA build_Lnl_2nfa(int n, std::uint64_t ell);
/// Sweeping 2DFA: counter for the first prime power, a right-to-left sweep
/// running the minimal DFA of the reversed Meyer-Fischer language, then the
/// remaining prime powers.
TwoWayFA build_Lnl_2dfa(int n, std::uint64_t ell);
/// Sweeping forgetting automaton; counters run on Z cells and share state
/// indices with the first sweep.
ForgettingLA build_Lnl_fla(int n, std::uint64_t ell);

OneWayFA build_J_dfa(int n, std::uint64_t ell);
TwoWayFA build_J_2dfa(int n, std::uint64_t ell);
ForgettingLA build_J_dfla(int n, std::uint64_t ell);

/// 2DFA for E_n comparing w[i] with w[|w|-n+i] for i = 1..n.
TwoWayFA build_en_2dfa(int n);

/// Deterministic forgetting automaton for H_{n,F(n)}; n >= 2.
ForgettingLA build_H_dfla(int n);
/// Same construction for H_{n,ell} with any ell >= 2 coprime or not.
ForgettingLA build_H_dfla(int n, std::uint64_t ell);

/// Minimal complete DFA of the reversal of the Meyer-Fischer language.
OneWayFA mf_reversal_dfa(int n);

std::uint64_t Lnl_dfa_states(int n, std::uint64_t ell);        // (2^n-1)*ell + 1
std::uint64_t Lnl_nfa_states(int n, std::uint64_t ell);        // n*ell
std::uint64_t Lnl_2nfa_states(int n, std::uint64_t ell);       // n + sum + o
std::uint64_t Lnl_2dfa_states(int n, std::uint64_t ell);       // |reversal DFA| + sum + o
std::uint64_t sweep_fla_states(int n, std::uint64_t ell);      // L and J forgetting automata
std::uint64_t J_2dfa_states(int n, std::uint64_t ell);         // n + sum + o
std::uint64_t en_2dfa_states(int n);                           // 9n - 1
std::uint64_t H_dfla_states(int n, std::uint64_t ell);

/// Largest value of count / n over the H construction; the builder asserts
/// it never exceeds this constant.
inline constexpr int kHStateFactor = 4;
/// Same for the E_n 2DFA.
inline constexpr int kEnStateFactor = 9;

/// Shortest-form witness reaching exactly S from q_0 in the Meyer-Fischer
/// automaton: a^i for S = {q_i}, otherwise blocks of a separated by b.
/// S lists state indices; it must be nonempty, sorted and within 0..n-1.
std::string witness_wS(int n, const std::vector<int>& S);
/// w_S padded so that it still reaches S and has length = j (mod ell).
/// Requires gcd(n, ell) = 1, j < ell and H*ell > 2n.
std::string witness_wSj(int n, std::uint64_t ell, const std::vector<int>& S, std::uint64_t j,
                        std::uint64_t H);

/// Smallest multiple of ell exceeding ell + n.
std::uint64_t default_H(int n, std::uint64_t ell);

}  // namespace fla
