#include "fla/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fla/classical.hpp"
#include "fla/numtheory.hpp"

namespace fla {

namespace {

constexpr char kA = 'a';
constexpr char kB = 'b';

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

void require_mf(int n) { require(n >= 2, "n must be at least 2, got " + std::to_string(n)); }

void require_ell(std::uint64_t ell) {
  require(ell >= 1, "ell must be positive");
  require(ell <= 1'000'000, "ell too large for explicit counters");
}

std::vector<int> prime_powers(std::uint64_t ell) {
  std::vector<int> out;
  for (auto p : factorize(ell).powers()) out.push_back(static_cast<int>(p));
  return out;
}

int sum_of(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

// Adds the first-sweep moves on input symbols for the a-counter modulo n:
// a advances, b keeps the value.
template <typename M>
void add_a_counter(M& m, int n) {
  for (int c = 0; c < n; ++c) {
    m.add_transition(c, kA, (c + 1) % n, kRight);
    m.add_transition(c, kB, c, kRight);
  }
}

void add_right(OneWayFA& m, State from, char c, State to) { m.add_transition(from, c, to); }
template <typename M>
void add_right(M& m, State from, char c, State to) { m.add_transition(from, c, to, kRight); }

template <typename M>
void add_mf_moves(M& m, int n) {
  for (int i = 0; i < n; ++i) {
    add_right(m, i, kA, (i + 1) % n);
    if (i > 0) {
      add_right(m, i, kB, i);
      add_right(m, i, kB, 0);
    }
  }
}

// Layout of the counter sweeps that follow a left-to-right first sweep.
// Counter i (1-based) runs right-to-left when i is odd and checks its value
// on '<', left-to-right when i is even and checks on '>'. Every counter
// starts at value 0 and counts the input cells it crosses.
struct CounterSweeps {
  std::vector<int> modulus;
  std::vector<std::vector<State>> state;  // state[i-1][v]
  State traverse = -1;                    // needed when the last sweep ends on '<'

  int r() const { return static_cast<int>(modulus.size()); }
  bool right_to_left(int i) const { return i % 2 == 1; }
};

// Adds the counter moves on `cells` (input symbols, or Z for a forgetting
// automaton) and on the end-markers. Returns the accepting state.
template <typename M>
State wire_counters(M& m, const CounterSweeps& cs, const std::vector<char>& cells) {
  const int r = cs.r();
  State accepting = -1;
  for (int i = 1; i <= r; ++i) {
    const int p = cs.modulus[i - 1];
    const int dir = cs.right_to_left(i) ? kLeft : kRight;
    for (int v = 0; v < p; ++v)
      for (char c : cells) m.add_transition(cs.state[i - 1][v], c, cs.state[i - 1][(v + 1) % p], dir);
    const State zero = cs.state[i - 1][0];
    if (cs.right_to_left(i)) {
      m.add_transition(zero, kLeftEnd, i < r ? cs.state[i][0] : cs.traverse, kRight);
    } else if (i < r) {
      m.add_transition(zero, kRightEnd, cs.state[i][0], kLeft);
    } else {
      m.add_transition(zero, kRightEnd, zero, kRight);
      accepting = zero;
    }
  }
  if (cs.traverse >= 0) {
    for (char c : cells) m.add_transition(cs.traverse, c, cs.traverse, kRight);
    m.add_transition(cs.traverse, kRightEnd, cs.traverse, kRight);
    accepting = cs.traverse;
  }
  return accepting;
}

// Consecutive indices starting at `base` for every counter, then the
// traversal state if the number of counters is odd.
CounterSweeps consecutive_counters(const std::vector<int>& powers, State base) {
  CounterSweeps cs;
  cs.modulus = powers;
  for (int p : powers) {
    cs.state.emplace_back();
    for (int v = 0; v < p; ++v) cs.state.back().push_back(base++);
  }
  if (cs.r() % 2 == 1) cs.traverse = base;
  return cs;
}

// n + sum + o sweeping two-way machine: a first left-to-right sweep on
// states 0..n-1 whose state 0 on '>' hands over to the counters.
TwoWayFA first_sweep_then_counters(int n, std::uint64_t ell, bool mf) {
  const auto powers = prime_powers(ell);
  const int r = static_cast<int>(powers.size());
  const int total = n + sum_of(powers) + r % 2;
  TwoWayFA m(total, binary_alphabet(), !mf, true);
  m.set_initial(0);
  if (mf)
    add_mf_moves(m, n);
  else
    add_a_counter(m, n);
  if (r == 0) {
    m.add_transition(0, kRightEnd, 0, kRight);
    m.set_final(0);
    return m;
  }
  const CounterSweeps cs = consecutive_counters(powers, n);
  m.add_transition(0, kRightEnd, cs.state[0][0], kLeft);
  m.set_final(wire_counters(m, cs, {kA, kB}));
  return m;
}

// Forgetting variant: counters read Z and reuse the first-sweep indices.
// First-sweep states only ever read input symbols and '>' (only state 0 has
// a move there), so a counter state may share an index with them unless it
// needs a move on '>': the zero states of left-to-right counters and the
// traversal state get fresh indices >= n, and index 0 is kept away from
// left-to-right counters altogether.
ForgettingLA sweeping_fla(int n, std::uint64_t ell, bool mf) {
  const auto powers = prime_powers(ell);
  const int r = static_cast<int>(powers.size());
  const int total = static_cast<int>(sweep_fla_states(n, ell));
  ForgettingLA m(total, binary_alphabet(), !mf);
  m.set_initial(0);
  if (mf)
    add_mf_moves(m, n);
  else
    add_a_counter(m, n);
  if (r == 0) {
    m.add_transition(0, kRightEnd, 0, kRight);
    m.set_final(0);
    return m;
  }
  CounterSweeps cs;
  cs.modulus = powers;
  cs.state.resize(r);
  const int high = r / 2 + r % 2;
  State next_high = total - high;
  State next_low = 0;
  for (int i = 1; i <= r; i += 2)
    for (int v = 0; v < powers[i - 1]; ++v) cs.state[i - 1].push_back(next_low++);
  for (int i = 2; i <= r; i += 2) {
    cs.state[i - 1].push_back(next_high++);
    for (int v = 1; v < powers[i - 1]; ++v) cs.state[i - 1].push_back(next_low++);
  }
  if (r % 2 == 1) cs.traverse = next_high++;
  if (next_low > total - high || next_high != total)
    throw std::logic_error("sweeping_fla: index layout overflow");
  m.add_transition(0, kRightEnd, cs.state[0][0], kLeft);
  m.set_final(wire_counters(m, cs, {kForget}));
  return m;
}

}  // namespace

const Alphabet& binary_alphabet() {
  static const Alphabet al("ab");
  return al;
}

OneWayFA build_mf(int n) {
  require_mf(n);
  OneWayFA m(n, binary_alphabet(), false);
  m.set_initial(0);
  m.set_final(0);
  add_mf_moves(m, n);
  return m;
}

OneWayFA build_Lnl_dfa(int n, std::uint64_t ell) {
  require_mf(n);
  require_ell(ell);
  require(n <= 20, "n too large for the explicit subset DFA");
  const std::uint64_t subsets = (std::uint64_t{1} << n) - 1;
  const int L = static_cast<int>(ell);
  const State sink = static_cast<State>(subsets * ell);
  OneWayFA m(sink + 1, binary_alphabet(), true);
  // Subset S (bit i = q_i, S != 0) with length residue j is (S-1)*ell + j.
  auto id = [&](std::uint64_t S, int j) { return static_cast<State>((S - 1) * ell + j); };
  const std::uint64_t all = subsets;
  for (std::uint64_t S = 1; S <= subsets; ++S) {
    const std::uint64_t on_a = ((S << 1) | (S >> (n - 1))) & all;
    const std::uint64_t rest = S & ~std::uint64_t{1};
    const std::uint64_t on_b = rest ? (rest | 1) : 0;
    for (int j = 0; j < L; ++j) {
      const int nj = (j + 1) % L;
      m.add_transition(id(S, j), kA, id(on_a, nj));
      m.add_transition(id(S, j), kB, on_b ? id(on_b, nj) : sink);
      if ((S & 1) && j == 0) m.set_final(id(S, j));
    }
  }
  m.add_transition(sink, kA, sink);
  m.add_transition(sink, kB, sink);
  m.set_initial(id(1, 0));
  return m;
}

OneWayFA build_Lnl_nfa(int n, std::uint64_t ell) {
  require_mf(n);
  require_ell(ell);
  return product(build_mf(n), length_mod_dfa(binary_alphabet(), static_cast<int>(ell)));
}

TwoWayFA build_Lnl_2nfa(int n, std::uint64_t ell) {
  require_mf(n);
  require_ell(ell);
  return first_sweep_then_counters(n, ell, true);
}

OneWayFA mf_reversal_dfa(int n) { return minimize(determinize(reverse(build_mf(n)))); }

TwoWayFA build_Lnl_2dfa(int n, std::uint64_t ell) {
  require_mf(n);
  require_ell(ell);
  const OneWayFA rev = mf_reversal_dfa(n);
  if (rev.num_states() > 2 * n)
    throw std::logic_error("reversal DFA has " + std::to_string(rev.num_states()) +
                           " states, more than 2n = " + std::to_string(2 * n));
  auto powers = prime_powers(ell);
  const int r = static_cast<int>(powers.size());
  // With ell = 1 a single-state modulus-1 counter carries the head to '>'.
  const std::vector<int> first{r == 0 ? 1 : powers[0]};
  const std::vector<int> rest(powers.begin() + (r == 0 ? 0 : 1), powers.end());
  const int d = rev.num_states();
  const bool traverse = r <= 1 || r % 2 == 1;
  const int total = first[0] + d + sum_of(rest) + (traverse ? 1 : 0);
  TwoWayFA m(total, binary_alphabet(), true, true);

  // Sweep 1: counter for the first prime power, left to right.
  const int p1 = first[0];
  m.set_initial(0);
  for (int v = 0; v < p1; ++v)
    for (char c : {kA, kB}) m.add_transition(v, c, (v + 1) % p1, kRight);
  const State dbase = p1;
  m.add_transition(0, kRightEnd, dbase + rev.initial(), kLeft);

  // Sweep 2: the reversal DFA, right to left.
  const State after = dbase + d;
  for (State q = 0; q < d; ++q)
    for (std::size_t x = 0; x < 2; ++x)
      m.add_transition(dbase + q, binary_alphabet().symbol(x), dbase + rev.targets(q, x)[0], kLeft);

  // Sweeps 3..: the remaining counters. They start after a right-to-left
  // sweep, so their directions are those of counters 2, 3, ... .
  State next = after;
  std::vector<std::vector<State>> ids;
  for (int p : rest) {
    ids.emplace_back();
    for (int v = 0; v < p; ++v) ids.back().push_back(next++);
  }
  const State t = traverse ? next : -1;
  const State first_rest = ids.empty() ? t : ids[0][0];
  for (State q = 0; q < d; ++q)
    if (rev.is_final(q)) m.add_transition(dbase + q, kLeftEnd, first_rest, kRight);

  const int k = static_cast<int>(rest.size());
  State accepting = t;
  for (int i = 0; i < k; ++i) {
    const bool ltr = i % 2 == 0;
    const int p = rest[i];
    for (int v = 0; v < p; ++v)
      for (char c : {kA, kB}) m.add_transition(ids[i][v], c, ids[i][(v + 1) % p], ltr ? kRight : kLeft);
    const State zero = ids[i][0];
    if (ltr) {
      if (i + 1 < k)
        m.add_transition(zero, kRightEnd, ids[i + 1][0], kLeft);
      else {
        m.add_transition(zero, kRightEnd, zero, kRight);
        accepting = zero;
      }
    } else {
      m.add_transition(zero, kLeftEnd, i + 1 < k ? ids[i + 1][0] : t, kRight);
    }
  }
  if (t >= 0) {
    for (char c : {kA, kB}) m.add_transition(t, c, t, kRight);
    m.add_transition(t, kRightEnd, t, kRight);
  }
  m.set_final(accepting);
  return m;
}

ForgettingLA build_Lnl_fla(int n, std::uint64_t ell) {
  require_mf(n);
  require_ell(ell);
  return sweeping_fla(n, ell, true);
}

OneWayFA build_J_dfa(int n, std::uint64_t ell) {
  require(n >= 1, "n must be positive");
  require_ell(ell);
  const int L = static_cast<int>(ell);
  OneWayFA m(n * L, binary_alphabet(), true);
  for (int c = 0; c < n; ++c)
    for (int j = 0; j < L; ++j) {
      m.add_transition(c * L + j, kA, ((c + 1) % n) * L + (j + 1) % L);
      m.add_transition(c * L + j, kB, c * L + (j + 1) % L);
    }
  m.set_initial(0);
  m.set_final(0);
  return m;
}

TwoWayFA build_J_2dfa(int n, std::uint64_t ell) {
  require(n >= 1, "n must be positive");
  require_ell(ell);
  return first_sweep_then_counters(n, ell, false);
}

ForgettingLA build_J_dfla(int n, std::uint64_t ell) {
  require(n >= 1, "n must be positive");
  require_ell(ell);
  return sweeping_fla(n, ell, false);
}

// States, in order:
//   D(j)    j = 1..n   moving right, the target cell is j-1 cells ahead
//   T(s,c)  c = 1..n   moving left from the cell holding s, c cells so far
//   V(s,i)  i = 1..n   moving right to '>' remembering s and i
//   R(s,c)  c = 0..n-1 moving left, c cells left to the mirror cell
//   W(c)    c = 1..n   moving right after a match, c cells so far
//   X(i)    i = 2..n   moving left to '<' before looking up cell i
TwoWayFA build_en_2dfa(int n) {
  require(n >= 1, "n must be positive");
  const int total = static_cast<int>(en_2dfa_states(n));
  TwoWayFA m(total, binary_alphabet(), true, false);
  auto D = [&](int j) { return j - 1; };
  auto T = [&](int s, int c) { return n + s * n + (c - 1); };
  auto V = [&](int s, int i) { return 3 * n + s * n + (i - 1); };
  auto R = [&](int s, int c) { return 5 * n + s * n + c; };
  auto W = [&](int c) { return 7 * n + (c - 1); };
  auto X = [&](int i) { return 8 * n + (i - 2); };
  const char sym[2] = {kA, kB};

  m.set_initial(D(1));
  for (int j = 1; j <= n; ++j)
    for (int s = 0; s < 2; ++s) m.add_transition(D(j), sym[s], j == 1 ? T(s, 1) : D(j - 1), j == 1 ? kLeft : kRight);
  for (int s = 0; s < 2; ++s) {
    for (int c = 1; c <= n; ++c) {
      if (c < n)
        for (char x : sym) m.add_transition(T(s, c), x, T(s, c + 1), kLeft);
      m.add_transition(T(s, c), kLeftEnd, V(s, c), kRight);
    }
    for (int i = 1; i <= n; ++i) {
      for (char x : sym) m.add_transition(V(s, i), x, V(s, i), kRight);
      m.add_transition(V(s, i), kRightEnd, R(s, n - i), kLeft);
    }
    for (int c = 1; c < n; ++c)
      for (char x : sym) m.add_transition(R(s, c), x, R(s, c - 1), kLeft);
    m.add_transition(R(s, 0), sym[s], W(1), kRight);
  }
  for (int c = 1; c <= n; ++c) {
    if (c < n)
      for (char x : sym) m.add_transition(W(c), x, W(c + 1), kRight);
    const int i = n + 1 - c;
    if (i == n)
      m.add_transition(W(c), kRightEnd, W(c), kRight);
    else
      m.add_transition(W(c), kRightEnd, X(i + 1), kLeft);
  }
  m.set_final(W(1));
  for (int i = 2; i <= n; ++i) {
    for (char x : sym) m.add_transition(X(i), x, X(i), kLeft);
    m.add_transition(X(i), kLeftEnd, D(i), kRight);
  }
  return m;
}

ForgettingLA build_H_dfla(int n) {
  require(n >= 2, "n must be at least 2");
  return build_H_dfla(n, landau(static_cast<unsigned>(n)).value);
}

// States, in order:
//   A(c)      c = 0..n-1  counting a's modulo n on fresh cells
//   counters  one block per prime power; sweep i counts the frozen cells
//             and expects floor((i-1)/2) modulo its modulus
//   B(k)      k = K..1    k more b's to see, K = n - floor(r/2)
//   F         everything checked; run to '>' and accept
//
// A(n-1) reading a closes a candidate prefix u and starts the sweeps.
// Right-to-left sweeps check on '<'; left-to-right sweeps check on the first
// fresh cell, which must be b and is frozen before turning back. Any failed
// check resumes counting: A(0) skips the frozen cells, a fresh a continues in
// A(1).
ForgettingLA build_H_dfla(int n, std::uint64_t ell) {
  require(n >= 2, "n must be at least 2");
  require(ell >= 2, "ell must be at least 2");
  require_ell(ell);
  const auto powers = prime_powers(ell);
  const int r = static_cast<int>(powers.size());
  const int K = n - r / 2;
  require(K >= 1, "ell has too many prime factors for n");
  const int total = static_cast<int>(H_dfla_states(n, ell));
  ForgettingLA m(total, binary_alphabet(), true);

  auto A = [&](int c) { return c; };
  std::vector<std::vector<State>> C;
  State next = n;
  for (int p : powers) {
    C.emplace_back();
    for (int v = 0; v < p; ++v) C.back().push_back(next++);
  }
  const State bbase = next;
  auto B = [&](int k) { return bbase + (K - k); };
  const State F = bbase + K;
  if (F + 1 != total) throw std::logic_error("build_H_dfla: state layout mismatch");

  m.set_initial(A(0));
  for (int c = 0; c < n; ++c) {
    if (c == n - 1)
      m.add_transition(A(c), kA, C[0][1 % powers[0]], kLeft);
    else
      m.add_transition(A(c), kA, A(c + 1), kRight);
    m.add_transition(A(c), kB, A(c), kRight);
  }
  m.add_transition(A(0), kForget, A(0), kRight);

  for (int i = 1; i <= r; ++i) {
    const int p = powers[i - 1];
    const int expect = ((i - 1) / 2) % p;
    const auto& S = C[i - 1];
    if (i % 2 == 1) {
      for (int v = 0; v < p; ++v) {
        m.add_transition(S[v], kForget, S[(v + 1) % p], kLeft);
        const State ok = i == r ? B(K) : C[i][0];
        m.add_transition(S[v], kLeftEnd, v == expect ? ok : A(0), kRight);
      }
    } else {
      for (int v = 0; v < p; ++v) {
        m.add_transition(S[v], kForget, S[(v + 1) % p], kRight);
        m.add_transition(S[v], kA, A(1), kRight);
        if (v != expect)
          m.add_transition(S[v], kB, A(0), kRight);
        else if (i == r)
          m.add_transition(S[v], kB, B(K), kRight);
        else
          m.add_transition(S[v], kB, C[i][1 % powers[i]], kLeft);
      }
    }
  }

  m.add_transition(B(K), kForget, B(K), kRight);
  for (int k = K; k >= 1; --k) {
    m.add_transition(B(k), kB, k == 1 ? F : B(k - 1), kRight);
    m.add_transition(B(k), kA, A(1), kRight);
  }
  m.add_transition(F, kA, F, kRight);
  m.add_transition(F, kB, F, kRight);
  m.add_transition(F, kRightEnd, F, kRight);
  m.set_final(F);
  if (total > kHStateFactor * n)
    throw std::logic_error("build_H_dfla: " + std::to_string(total) + " states exceed " +
                           std::to_string(kHStateFactor) + "n");
  return m;
}

std::uint64_t Lnl_dfa_states(int n, std::uint64_t ell) {
  return ((std::uint64_t{1} << n) - 1) * ell + 1;
}

std::uint64_t Lnl_nfa_states(int n, std::uint64_t ell) { return static_cast<std::uint64_t>(n) * ell; }

std::uint64_t Lnl_2nfa_states(int n, std::uint64_t ell) {
  const auto powers = prime_powers(ell);
  return static_cast<std::uint64_t>(n + sum_of(powers) + static_cast<int>(powers.size()) % 2);
}

std::uint64_t Lnl_2dfa_states(int n, std::uint64_t ell) {
  const auto powers = prime_powers(ell);
  const int r = static_cast<int>(powers.size());
  const int d = mf_reversal_dfa(n).num_states();
  if (r == 0) return static_cast<std::uint64_t>(d + 2);
  return static_cast<std::uint64_t>(d + sum_of(powers) + r % 2);
}

std::uint64_t sweep_fla_states(int n, std::uint64_t ell) {
  const auto powers = prime_powers(ell);
  const int r = static_cast<int>(powers.size());
  if (r == 0) return static_cast<std::uint64_t>(n);
  const int o = r % 2;
  return static_cast<std::uint64_t>(std::max(sum_of(powers) + o, n + r / 2 + o));
}

std::uint64_t J_2dfa_states(int n, std::uint64_t ell) { return Lnl_2nfa_states(n, ell); }

std::uint64_t en_2dfa_states(int n) { return static_cast<std::uint64_t>(9 * n - 1); }

std::uint64_t H_dfla_states(int n, std::uint64_t ell) {
  const auto powers = prime_powers(ell);
  const int r = static_cast<int>(powers.size());
  return static_cast<std::uint64_t>(n + sum_of(powers) + (n - r / 2) + 1);
}

std::string witness_wS(int n, const std::vector<int>& S) {
  require_mf(n);
  require(!S.empty(), "witness strings are defined for nonempty state sets only");
  for (std::size_t i = 0; i < S.size(); ++i) {
    require(S[i] >= 0 && S[i] < n, "state index out of range");
    require(i == 0 || S[i - 1] < S[i], "state set must be sorted without repetitions");
  }
  if (S.size() == 1) return std::string(static_cast<std::size_t>(S[0]), kA);
  std::string w;
  for (std::size_t i = S.size() - 1; i >= 1; --i) {
    w.append(static_cast<std::size_t>(S[i] - S[i - 1]), kA);
    w.push_back(kB);
  }
  w.append(static_cast<std::size_t>(S[0]), kA);
  return w;
}

std::string witness_wSj(int n, std::uint64_t ell, const std::vector<int>& S, std::uint64_t j,
                        std::uint64_t H) {
  const std::string base = witness_wS(n, S);
  require(gcd(static_cast<std::uint64_t>(n), ell) == 1, "n and ell must be coprime");
  require(j < ell, "j must be below ell");
  require(H >= 1 && H * ell > 2 * static_cast<std::uint64_t>(n), "need H >= 1 and H*ell > 2n");
  if (S.size() == 1)
    return std::string(crt_witness(static_cast<std::uint64_t>(S[0]), j, static_cast<std::uint64_t>(n), ell), kA);
  const std::uint64_t k = S.size();
  const std::uint64_t run = H * ell - k - static_cast<std::uint64_t>(S.back()) + 2 + j;
  // Replace the last b of w_S (just before the final a^{e_1} block).
  const std::size_t last_b = base.size() - static_cast<std::size_t>(S[0]) - 1;
  return base.substr(0, last_b) + std::string(run, kB) + base.substr(last_b + 1);
}

std::uint64_t default_H(int n, std::uint64_t ell) {
  require(ell >= 1, "ell must be positive");
  return (ell + static_cast<std::uint64_t>(n)) / ell * ell + ell;
}

}  // namespace fla
