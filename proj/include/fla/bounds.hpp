#pragma once

// Lower-bound certificates: fooling sets for one-way NFAs, extended fooling
// sets, and the equal-length variant that bounds forgetting automata.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fla/predicates.hpp"

namespace fla {

enum class FoolingKind {
  standard,  // x_i y_i in L, x_i y_j not in L for i != j
  extended,  // x_i y_i in L, x_i y_j or x_j y_i not in L for i != j
  fla,       // extended, and all x_i of equal length
};

const char* to_string(FoolingKind kind);

struct FoolingSet {
  std::vector<std::pair<std::string, std::string>> pairs;
  FoolingKind kind = FoolingKind::standard;
  Oracle oracle;
};

struct FoolingCheck {
  bool valid = false;
  /// Implied lower bound on the number of states (the set size) when valid.
  std::size_t bound = 0;
  /// First violated condition, human readable.
  std::optional<std::string> violation;
};

FoolingCheck check_fooling(const FoolingSet& fs);

/// {(a^i, a^{n ell - i}) : 0 <= i < n ell} for L_{n,ell}; gcd(n, ell) = 1.
FoolingSet build_thm5_set(int n, std::uint64_t ell);
/// {(a^j b^{H+i-j}, b^{H-i-n+j} a^{n-j}) : 1 <= i <= ell, 0 <= j < n} for
/// J_{n,ell}; H > ell + n and H a multiple of ell.
FoolingSet build_thm8_set(int n, std::uint64_t ell, std::uint64_t H);
/// {(x, x) : x in {a,b}^n} for E_n, equal-length kind.
FoolingSet build_thm13_set(int n);
/// The J_{n,ell} pairs with b^n appended to every right part, for H_{n,ell}.
FoolingSet build_H_footnote_set(int n, std::uint64_t ell, std::uint64_t H);

/// Size of a subset of `strings` whose members are pairwise distinguished by
/// the oracle, chosen greedily in list order. Two strings are told apart by a
/// hint separator if one works, otherwise by exhaustive search over suffixes
/// over `alphabet` of length at most `depth`.
std::size_t distinguishability_count(const std::vector<std::string>& strings, const Oracle& oracle,
                                     int depth, const std::vector<std::string>& hints = {},
                                     const std::string& alphabet = "ab");

/// Separators a^{f(n-s, ell-j)} for every state s and residue j.
std::vector<std::string> Lnl_separators(int n, std::uint64_t ell);

}  // namespace fla
