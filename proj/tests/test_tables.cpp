#include <doctest.h>

#include <stdexcept>

#include "corpus.hpp"
#include "fla/classical.hpp"
#include "fla/families.hpp"
#include "fla/numtheory.hpp"
#include "fla/predicates.hpp"
#include "fla/simulator.hpp"
#include "fla/tables.hpp"

using namespace fla;

namespace {

std::vector<testing::CorpusEntry> corpus() {
  auto out = testing::random_corpus();
  out.push_back({"always-right", testing::always_right()});
  out.push_back({"always-right-reject", testing::always_right(false)});
  out.push_back({"no-z", testing::no_z_moves()});
  out.push_back({"L-3-2", build_Lnl_fla(3, 2)});
  out.push_back({"L-2-3", build_Lnl_fla(2, 3)});
  out.push_back({"J-2-3", build_J_dfla(2, 3)});
  out.push_back({"J-3-4", build_J_dfla(3, 4)});
  out.push_back({"H-2", build_H_dfla(2)});
  return out;
}

// Run of the machine on "<Z^m a" entered at cell m+1 in state q: states in
// which the head first reaches cell m+2, by direct search over positions.
StateMask direct_entry(const ForgettingLA& m, std::size_t len, State q, char a) {
  const auto& al = m.alphabet();
  const std::size_t cell = len + 1;
  std::vector<std::vector<char>> seen(m.num_states(), std::vector<char>(cell + 1, 0));
  std::vector<std::pair<State, std::size_t>> stack;
  StateMask out = 0;
  // first step on the fresh cell
  for (const auto& mv : m.moves(q, al.tape_index(a))) {
    if (mv.move > 0) {
      out |= StateMask{1} << mv.to;
    } else if (!seen[mv.to][cell - 1]) {
      seen[mv.to][cell - 1] = 1;
      stack.emplace_back(mv.to, cell - 1);
    }
  }
  while (!stack.empty()) {
    auto [p, pos] = stack.back();
    stack.pop_back();
    const std::size_t sym = pos == 0 ? al.left_end_index() : al.forget_index();
    for (const auto& mv : m.moves(p, sym)) {
      if (mv.move > 0 && pos == cell) {
        out |= StateMask{1} << mv.to;
        continue;
      }
      if (mv.move < 0 && pos == 0) continue;
      const std::size_t np = mv.move > 0 ? pos + 1 : pos - 1;
      if (!seen[mv.to][np]) {
        seen[mv.to][np] = 1;
        stack.emplace_back(mv.to, np);
      }
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("tables") {

TEST_CASE("tables of trivial machines") {
  const auto all = testing::always_right();
  for (std::size_t k = 0; k <= 5; ++k) {
    const auto t = compute_table(all, k);
    CHECK(t.get(0, 0));
    CHECK(extend_table(all, t) == t);
  }
  const auto noz = testing::no_z_moves();
  for (std::size_t k = 1; k <= 5; ++k) CHECK(compute_table(noz, k).empty());
  TransitionTable full(1);
  full.set(0, 0);
  CHECK(extend_table(noz, full).empty());
}

TEST_CASE("extension matches direct computation") {
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    auto t = compute_table(e.machine, 0);
    for (std::size_t k = 1; k <= 30; ++k) {
      t = extend_table(e.machine, t);
      REQUIRE(t == compute_table(e.machine, k));
    }
  }
}

TEST_CASE("entry step") {
  ForgettingLA m(2, Alphabet("ab"));
  m.add_transition(0, 'a', 1, 1);
  for (std::size_t k = 0; k < 3; ++k) CHECK(entry_step(m, compute_table(m, k), 0, 'a') == std::vector<State>{1});
  ForgettingLA left(2, Alphabet("ab"));
  left.add_transition(0, 'a', 1, -1);
  CHECK(entry_step(left, TransitionTable(2), 0, 'a').empty());
  CHECK_THROWS_AS(entry_step(m, TransitionTable(2), 0, 'c'), std::invalid_argument);

  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    for (std::size_t k = 0; k <= 6; ++k) {
      const auto t = compute_table(e.machine, k);
      for (State q = 0; q < e.machine.num_states(); ++q)
        for (char a : std::string("ab")) CHECK(entry_mask(e.machine, t, q, a == 'a' ? 0 : 1) == direct_entry(e.machine, k, q, a));
    }
  }
}

TEST_CASE("accept closure") {
  const auto all = testing::always_right();
  CHECK(accept_closure(all, compute_table(all, 0), 0));
  CHECK_FALSE(accept_closure(testing::always_right(false), compute_table(all, 0), 0));
  ForgettingLA none(1, Alphabet("ab"));
  none.set_final(0);
  CHECK_FALSE(accept_closure(none, TransitionTable(1), 0));
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    CHECK(accepts(e.machine, "") == accept_closure(e.machine, compute_table(e.machine, 0), e.machine.initial()));
  }
}

TEST_CASE("period detection") {
  const auto all = detect_period(testing::always_right());
  CHECK(all.rho == 0);
  CHECK(all.lambda == 1);
  const auto j = detect_period(build_J_dfla(2, 3));
  CHECK(6 % j.lambda == 0);
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    const auto& m = e.machine;
    const int n = m.num_states();
    const auto seq = detect_period(m);
    CHECK(seq.tables.size() == seq.rho + seq.lambda);
    CHECK(seq.lambda <= landau(n).value);
    CHECK(seq.rho <= 5ull * n * n + 1);
    if (m.deterministic()) CHECK(seq.rho <= static_cast<std::size_t>(n) + 1);
    // the first repeat is exactly at rho + lambda
    for (std::size_t k = 0; k < seq.rho + 2 * seq.lambda + 3; ++k) CHECK(compute_table(m, k) == seq.table(k));
    for (std::size_t a = 0; a < seq.tables.size(); ++a)
      for (std::size_t b = a + 1; b < seq.tables.size(); ++b) CHECK_FALSE(seq.tables[a] == seq.tables[b]);
  }
}

TEST_CASE("conversions preserve the language") {
  const auto words = testing::words_up_to("ab", 12);
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    const auto& m = e.machine;
    const auto nfa = fla_to_nfa(m);
    const auto dfa = fla_to_dfa(m);
    CHECK(dfa.deterministic());
    CHECK(validate(dfa).empty());
    for (const auto& w : words) {
      const bool want = accepts(m, w);
      REQUIRE(accepts(nfa, w) == want);
      REQUIRE(accepts(dfa, w) == want);
    }
    CHECK(isomorphic(minimize(dfa), minimize(determinize(nfa))));
    if (m.deterministic()) CHECK(equivalent(dfla_to_dfa(m), nfa).equivalent);
  }
}

TEST_CASE("conversion sizes stay within the bounds") {
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    const auto& m = e.machine;
    const int n = m.num_states();
    const auto seq = detect_period(m);
    const auto nfa = fla_to_nfa(m);
    CHECK(static_cast<std::uint64_t>(nfa.num_states()) <= n * (seq.rho + seq.lambda));
    CHECK(static_cast<std::uint64_t>(nfa.num_states()) <= nfa_conversion_bound(n));
    CHECK(static_cast<std::uint64_t>(fla_to_dfa(m).num_states()) <= dfa_conversion_bound(n));
    if (m.deterministic()) CHECK(static_cast<std::uint64_t>(dfla_to_dfa(m).num_states()) <= dfla_conversion_bound(n));
  }
  CHECK(nfa_conversion_bound(3) == 3 * (45 + 3) + 1);
  CHECK(dfa_conversion_bound(3) == 7 * (45 + 3) + 2);
  CHECK(dfla_conversion_bound(3) == 3 * (3 + 3) + 2);
}

TEST_CASE("small conversion examples") {
  const auto all = fla_to_nfa(testing::always_right());
  CHECK(all.num_states() == 1);
  CHECK(equivalent(all, universal_dfa(Alphabet("ab"))).equivalent);
  CHECK(minimize(fla_to_dfa(testing::always_right(false))).num_states() == 1);
  CHECK(equivalent(build_Lnl_nfa(3, 2), fla_to_nfa(build_Lnl_fla(3, 2))).equivalent);
  for (const auto& w : testing::words_up_to("ab", 12)) {
    CHECK(accepts(dfla_to_dfa(build_J_dfla(2, 3)), w) == predicate_J(2, 3, w));
  }
  const auto h = dfla_to_dfa(build_H_dfla(2));
  for (const auto& w : testing::words_up_to("ab", 12)) CHECK(accepts(h, w) == predicate_H(2, 2, w));
  ForgettingLA nd(2, Alphabet("ab"));
  CHECK_THROWS_AS(dfla_to_dfa(nd), std::invalid_argument);
}

}
