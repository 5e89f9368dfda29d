// Acceptance checks. Prints one PASS or FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "fla/bounds.hpp"
#include "fla/classical.hpp"
#include "fla/families.hpp"
#include "fla/numtheory.hpp"
#include "fla/predicates.hpp"
#include "fla/simulator.hpp"
#include "fla/tables.hpp"

using namespace fla;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail.str("");
      detail << "first failure: " << what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail.str("");
    out.detail << "exception: " << e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!out.ok) ++failures;
  std::cout << (out.ok ? "PASS" : "FAIL") << " " << id << " " << title << " [" << out.detail.str() << "; "
            << static_cast<int>(secs * 1000) << " ms]" << std::endl;
}

struct FamilyMachine {
  std::string name;
  ForgettingLA machine;
  OneWayFA reference;
};

std::vector<FamilyMachine> family_machines() {
  std::vector<FamilyMachine> out;
  for (auto [n, l] : std::vector<std::pair<int, std::uint64_t>>{{2, 2}, {2, 3}, {3, 2}, {3, 4}, {3, 6}}) {
    const auto al = testing::reference_mf(n).alphabet();
    const auto L = product(testing::reference_mf(n), length_mod_dfa(al, static_cast<int>(l)));
    out.push_back({"L(" + std::to_string(n) + "," + std::to_string(l) + ")", build_Lnl_fla(n, l), L});
    out.push_back({"J(" + std::to_string(n) + "," + std::to_string(l) + ")", build_J_dfla(n, l),
                   testing::reference_J(n, l)});
  }
  for (int n = 2; n <= 3; ++n)
    out.push_back({"H(" + std::to_string(n) + ")", build_H_dfla(n), testing::reference_H(n, landau(n).value)});
  return out;
}

// Language of m restricted to words of length <= max_len, as a trie DFA
// assembled from direct simulation.
OneWayFA brute_force_language(const ForgettingLA& m, int max_len) {
  std::vector<std::string> yes;
  for (const auto& w : testing::words_up_to("ab", max_len))
    if (accepts(m, w)) yes.push_back(w);
  return determinize(testing::trie_dfa("ab", yes));
}

}  // namespace

int main() {
  const auto corpus = testing::random_corpus();
  const auto families = family_machines();
  std::vector<std::pair<std::string, ForgettingLA>> all;
  for (const auto& e : corpus) all.emplace_back(e.name, e.machine);
  for (const auto& f : families) all.emplace_back(f.name, f.machine);

  criterion(1, "Meyer-Fischer blow-up: minimal DFA has 2^n states, n = 3..8", [](Outcome& o) {
    for (int n = 3; n <= 8; ++n) {
      const int got = minimize(determinize(build_mf(n))).num_states();
      o.detail << "n=" << n << ":" << got << " ";
      o.require(got == 1 << n, "n=" + std::to_string(n) + " gave " + std::to_string(got));
    }
  });

  criterion(2, "L_{n,ell} minimal DFA has (2^n-1)ell+1 states", [](Outcome& o) {
    for (auto [n, l] : std::vector<std::pair<int, std::uint64_t>>{{3, 2}, {2, 3}, {3, 4}, {5, 6}}) {
      const auto got = static_cast<std::uint64_t>(minimize(determinize(build_Lnl_nfa(n, l))).num_states());
      const auto want = ((std::uint64_t{1} << n) - 1) * l + 1;
      o.detail << "(" << n << "," << l << "):" << got << " ";
      o.require(got == want, "(" + std::to_string(n) + "," + std::to_string(l) + ") gave " + std::to_string(got));
    }
  });

  criterion(3, "fooling certificates for L_{n,ell} and J_{n,ell} have size n*ell", [](Outcome& o) {
    for (auto [n, l] : std::vector<std::pair<int, std::uint64_t>>{{3, 2}, {2, 3}, {3, 4}, {5, 6}}) {
      const auto r = check_fooling(build_thm5_set(n, l));
      o.detail << "L(" << n << "," << l << "):" << r.bound << " ";
      o.require(r.valid && r.bound == n * l, "L set for (" + std::to_string(n) + "," + std::to_string(l) + ")" +
                                                   (r.violation ? ": " + *r.violation : ""));
    }
    for (auto [n, l] : std::vector<std::pair<int, std::uint64_t>>{{2, 3}, {3, 4}}) {
      const auto H = default_H(n, l);
      const auto r = check_fooling(build_thm8_set(n, l, H));
      o.detail << "J(" << n << "," << l << ",H=" << H << "):" << r.bound << " ";
      o.require(r.valid && r.bound == n * l, "J set for (" + std::to_string(n) + "," + std::to_string(l) + ")" +
                                                   (r.violation ? ": " + *r.violation : ""));
    }
  });

  criterion(4, "forgetting automata for L_{5,6} and J_{5,6} have at most 6 states and match on |w| <= 14",
            [](Outcome& o) {
              const auto L = build_Lnl_fla(5, 6);
              const auto J = build_J_dfla(5, 6);
              o.detail << "L:" << L.num_states() << " J:" << J.num_states() << " ";
              o.require(L.num_states() <= 6, "L machine has " + std::to_string(L.num_states()) + " states");
              o.require(J.num_states() <= 6, "J machine has " + std::to_string(J.num_states()) + " states");
              o.require(J.deterministic(), "J machine is not deterministic");
              std::size_t checked = 0;
              for (const auto& w : testing::words_up_to("ab", 14)) {
                ++checked;
                o.require(accepts(L, w) == predicate_L(5, 6, w), "L disagrees on " + w);
                o.require(accepts(J, w) == predicate_J(5, 6, w), "J disagrees on " + w);
              }
              o.detail << "words:" << checked;
            });

  criterion(5, "conversion to NFA preserves the language", [&](Outcome& o) {
    const auto bounded = testing::bounded_length_dfa("ab", 12);
    for (const auto& [name, m] : all) {
      const auto nfa = fla_to_nfa(m);
      const auto r = equivalent(product(nfa, bounded), brute_force_language(m, 12));
      o.require(r.equivalent, name + " differs on " + r.counterexample.value_or("?"));
    }
    for (const auto& f : families) {
      const auto r = equivalent(fla_to_nfa(f.machine), f.reference);
      o.require(r.equivalent, f.name + " differs from its reference on " + r.counterexample.value_or("?"));
    }
    o.detail << corpus.size() << " corpus machines, " << families.size() << " family machines";
  });

  criterion(6, "conversion sizes within n(5n^2+F(n))+1, (2^n-1)(5n^2+F(n))+2, n(n+F(n))+2", [&](Outcome& o) {
    std::uint64_t worst_nfa = 0, worst_dfa = 0, worst_dfla = 0;
    for (const auto& [name, m] : all) {
      const int n = m.num_states();
      const auto a = static_cast<std::uint64_t>(fla_to_nfa(m).num_states());
      const auto b = static_cast<std::uint64_t>(fla_to_dfa(m).num_states());
      o.require(a <= nfa_conversion_bound(n), name + " NFA has " + std::to_string(a) + " states");
      o.require(b <= dfa_conversion_bound(n), name + " DFA has " + std::to_string(b) + " states");
      worst_nfa = std::max(worst_nfa, a);
      worst_dfa = std::max(worst_dfa, b);
      if (m.deterministic()) {
        const auto c = static_cast<std::uint64_t>(dfla_to_dfa(m).num_states());
        o.require(c <= dfla_conversion_bound(n), name + " deterministic DFA has " + std::to_string(c) + " states");
        worst_dfla = std::max(worst_dfla, c);
      }
    }
    o.detail << "largest nfa " << worst_nfa << ", dfa " << worst_dfa << ", deterministic dfa " << worst_dfla;
  });

  criterion(7, "period lambda <= F(n); preperiod rho <= n+1 for deterministic machines", [&](Outcome& o) {
    std::size_t max_rho = 0, max_lambda = 0;
    for (const auto& [name, m] : all) {
      const int n = m.num_states();
      const auto seq = detect_period(m);
      o.require(seq.lambda <= landau(n).value, name + " has lambda " + std::to_string(seq.lambda));
      if (m.deterministic()) {
        o.require(seq.rho <= static_cast<std::size_t>(n) + 1, name + " has rho " + std::to_string(seq.rho));
      }
      max_rho = std::max(max_rho, seq.rho);
      max_lambda = std::max(max_lambda, seq.lambda);
    }
    o.detail << all.size() << " machines, largest rho " << max_rho << ", largest lambda " << max_lambda;
  });

  criterion(8, "Landau: dynamic program equals brute force for n <= 30; gcd(p, F(p)) = 1 for primes 5..60",
            [](Outcome& o) {
              for (unsigned n = 1; n <= 30; ++n)
                o.require(landau(n).value == landau_bruteforce(n), "n=" + std::to_string(n));
              int primes = 0;
              for (unsigned p = 5; p <= 60; ++p) {
                if (!is_prime(p)) continue;
                ++primes;
                o.require(gcd(p, landau(p).value) == 1, "p=" + std::to_string(p));
              }
              o.detail << "F(30)=" << landau(30).value << ", " << primes << " primes";
            });

  criterion(9, "E_n: 2DFA with at most 9n states, forgetting automata need 2^n, n = 3..6", [](Outcome& o) {
    for (int n = 3; n <= 6; ++n) {
      const int states = build_en_2dfa(n).num_states();
      const auto r = check_fooling(build_thm13_set(n));
      o.detail << "n=" << n << ":" << states << " vs " << r.bound << " ";
      o.require(states <= kEnStateFactor * n, "2DFA for n=" + std::to_string(n) + " too large");
      o.require(r.valid && r.bound == (std::size_t{1} << n), "fooling set for n=" + std::to_string(n));
    }
    o.detail << "c=" << kEnStateFactor;
  });

  criterion(10, "reversal of the Meyer-Fischer language needs at most 2n DFA states, n = 3..6", [](Outcome& o) {
    for (int n = 3; n <= 6; ++n) {
      const int got = minimize(determinize(reverse(build_mf(n)))).num_states();
      o.detail << "n=" << n << ":" << got << " ";
      o.require(got <= 2 * n, "n=" + std::to_string(n) + " gave " + std::to_string(got));
    }
  });

  criterion(11, "H_{n,F(n)} deterministic forgetting automaton matches on |w| <= 14 with at most 4n states",
            [](Outcome& o) {
              for (int n = 2; n <= 3; ++n) {
                const auto m = build_H_dfla(n);
                const auto F = landau(n).value;
                o.detail << "n=" << n << ":" << m.num_states() << " ";
                o.require(m.deterministic(), "not deterministic");
                o.require(m.num_states() <= kHStateFactor * n, "too many states for n=" + std::to_string(n));
                for (const auto& w : testing::words_up_to("ab", 14))
                  o.require(accepts(m, w) == predicate_H(n, F, w), "n=" + std::to_string(n) + " disagrees on " + w);
              }
              o.detail << "c=" << kHStateFactor;
            });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
