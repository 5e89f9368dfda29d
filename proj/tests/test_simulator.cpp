#include <doctest.h>

#include <stdexcept>

#include "corpus.hpp"
#include "fla/families.hpp"
#include "fla/predicates.hpp"
#include "fla/simulator.hpp"

using namespace fla;

TEST_SUITE("simulator") {

TEST_CASE("one-way examples") {
  const auto mf = build_mf(3);
  CHECK(accepts(mf, "aaa"));
  CHECK_FALSE(accepts(mf, "b"));
  CHECK(accepts(mf, ""));
  OneWayFA none(2, Alphabet("ab"));
  none.set_initial(1);
  CHECK_FALSE(accepts(none, ""));
  CHECK_THROWS_AS(accepts(mf, "c"), std::invalid_argument);
}

TEST_CASE("two-way examples") {
  const auto e2 = build_en_2dfa(2);
  CHECK(accepts(e2, "abab"));
  CHECK_FALSE(accepts(e2, "abba"));
  const auto l = build_Lnl_2nfa(3, 2);
  for (const auto& w : testing::words_up_to("ab", 10)) CHECK(accepts(l, w) == testing::ref_L(3, 2, w));
}

TEST_CASE("forgetting examples") {
  const auto all = testing::always_right();
  for (const auto& w : testing::words_up_to("ab", 6)) CHECK(accepts(all, w));
  CHECK(accepts(build_J_dfla(2, 3), "aab"));
  for (int n = 2; n <= 3; ++n)
    for (std::uint64_t l = 2; l <= 3; ++l) {
      const auto m = build_Lnl_fla(n, l);
      for (const auto& w : testing::words_up_to("ab", 10)) {
        CAPTURE(w);
        CHECK(accepts(m, w) == testing::ref_L(n, l, w));
      }
    }
}

TEST_CASE("empty input starts on the right end-marker") {
  // Accepts only if the first move is made on '>'; an 'a' move never fires.
  ForgettingLA m(2, Alphabet("ab"), true);
  m.add_transition(0, '>', 1, 1);
  m.set_final(1);
  CHECK(accepts(m, ""));
  CHECK_FALSE(accepts(m, "a"));
}

TEST_CASE("no move on a fresh cell is a dead end") {
  CHECK_FALSE(accepts(testing::no_z_moves(), "a"));
  CHECK_FALSE(accepts(testing::no_z_moves(), ""));
}

TEST_CASE("invalid machines are refused") {
  ForgettingLA m(1, Alphabet("ab"));
  m.add_transition(0, 'a', 0, 'a', 1);
  CHECK_THROWS_AS(accepts(m, "a"), std::invalid_argument);
}

TEST_CASE("predicates") {
  CHECK(predicate_J(2, 3, "aab"));
  CHECK(predicate_E(2, "ab"));
  CHECK(predicate_H(2, 2, "aabb"));
  CHECK_FALSE(predicate_E(2, "a"));
  for (const auto& w : testing::words_up_to("ab", 10)) {
    CHECK(predicate_L(3, 2, w) == testing::ref_L(3, 2, w));
    CHECK(predicate_J(2, 3, w) == testing::ref_J(2, 3, w));
    CHECK(predicate_H(2, 2, w) == testing::ref_H(2, 2, w));
    CHECK(predicate_H(3, 3, w) == testing::ref_H(3, 3, w));
    CHECK(predicate_E(3, w) == testing::ref_E(3, w));
  }
}

TEST_CASE("deterministic machines never branch") {
  const auto words = testing::words_up_to("ab", 7);
  for (const auto& e : testing::random_corpus()) {
    if (!e.machine.deterministic()) continue;
    for (const auto& w : words) CHECK(max_branching(e.machine, w) <= 1);
  }
  for (const auto& w : words) {
    CHECK(max_branching(build_J_dfla(3, 4), w) <= 1);
    CHECK(max_branching(build_H_dfla(3), w) <= 1);
    CHECK(max_branching(build_en_2dfa(3), w) <= 1);
    CHECK(max_branching(build_Lnl_2dfa(3, 2), w) <= 1);
  }
}

}
