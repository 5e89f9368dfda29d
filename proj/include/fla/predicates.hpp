#pragma once

// Direct membership tests for the witness languages over {a, b}.
//
//   L(n, ell): words accepted by the Meyer-Fischer automaton whose length is
//              a multiple of ell
//   J(n, ell): |w|_a divisible by n and |w| divisible by ell
//   H(n, ell): w = u b^n v where u ends in a, |u|_a divisible by n and |u|
//              divisible by ell
//   E(n):      |w| >= n and the length-n prefix equals the length-n suffix

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace fla {

using Oracle = std::function<bool(std::string_view)>;

bool predicate_L(int n, std::uint64_t ell, std::string_view w);
bool predicate_J(int n, std::uint64_t ell, std::string_view w);
bool predicate_H(int n, std::uint64_t ell, std::string_view w);
bool predicate_E(int n, std::string_view w);

Oracle oracle_L(int n, std::uint64_t ell);
Oracle oracle_J(int n, std::uint64_t ell);
Oracle oracle_H(int n, std::uint64_t ell);
Oracle oracle_E(int n);

}  // namespace fla
