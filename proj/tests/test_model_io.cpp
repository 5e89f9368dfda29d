#include <doctest.h>

#include <stdexcept>

#include "corpus.hpp"
#include "fla/families.hpp"
#include "fla/machine_io.hpp"
#include "fla/model.hpp"

using namespace fla;

namespace {

std::vector<Machine> built_machines() {
  std::vector<Machine> out;
  for (int n = 2; n <= 4; ++n) out.push_back(build_mf(n));
  for (auto [n, l] : std::vector<std::pair<int, std::uint64_t>>{{3, 2}, {2, 3}, {3, 4}, {2, 6}, {5, 6}, {3, 1}}) {
    out.push_back(build_Lnl_dfa(n, l));
    out.push_back(build_Lnl_nfa(n, l));
    out.push_back(build_Lnl_2nfa(n, l));
    out.push_back(build_Lnl_2dfa(n, l));
    out.push_back(build_Lnl_fla(n, l));
    out.push_back(build_J_dfa(n, l));
    out.push_back(build_J_2dfa(n, l));
    out.push_back(build_J_dfla(n, l));
  }
  for (int n = 1; n <= 6; ++n) out.push_back(build_en_2dfa(n));
  for (int n = 2; n <= 6; ++n) out.push_back(build_H_dfla(n));
  return out;
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("alphabet rules") {
  CHECK(validate(Alphabet("ab")).empty());
  CHECK_FALSE(validate(Alphabet("")).empty());
  CHECK_FALSE(validate(Alphabet("aZ")).empty());
  CHECK_FALSE(validate(Alphabet("a<")).empty());
  CHECK_FALSE(validate(Alphabet("aa")).empty());
  const Alphabet al("ab");
  CHECK(al.forget_index() == 2);
  CHECK(al.left_end_index() == 3);
  CHECK(al.right_end_index() == 4);
  CHECK(al.tape_index('Z') == 2);
  CHECK(al.tape_symbol(4) == '>');
}

TEST_CASE("every builder validates") {
  for (const auto& m : built_machines()) {
    const auto v = validate(m);
    CAPTURE(kind_of(m));
    CAPTURE(state_count(m));
    CHECK(v.empty());
  }
}

TEST_CASE("forgetting rule violations are reported") {
  ForgettingLA m(1, Alphabet("ab"));
  m.add_transition(0, 'a', 0, 'a', 1);
  CHECK_FALSE(validate(m).empty());
  ForgettingLA z(1, Alphabet("ab"));
  z.add_transition(0, 'Z', 0, 'a', 1);
  CHECK_FALSE(validate(z).empty());
  ForgettingLA left(1, Alphabet("ab"));
  left.add_transition(0, '<', 0, -1);
  CHECK_FALSE(validate(left).empty());
  ForgettingLA det(2, Alphabet("ab"), true);
  det.add_transition(0, 'a', 0, 1);
  det.add_transition(0, 'a', 1, 1);
  CHECK_FALSE(validate(det).empty());
}

TEST_CASE("degenerate machines are valid") {
  OneWayFA none(3, Alphabet("ab"));
  CHECK(validate(none).empty());
  CHECK(validate(testing::always_right(false)).empty());
}

TEST_CASE("two-way machines have no Z moves") {
  TwoWayFA t(1, Alphabet("ab"));
  t.add_transition(0, 'Z', 0, 1);
  CHECK_FALSE(validate(t).empty());
}

}

TEST_SUITE("machine-io") {

TEST_CASE("round trip over builders and corpus") {
  auto machines = built_machines();
  for (const auto& e : testing::random_corpus()) machines.push_back(e.machine);
  for (const auto& m : machines) {
    const auto text = serialize(m);
    const auto back = parse_machine(text);
    CHECK(back == m);
    CHECK(serialize(back) == text);
  }
}

TEST_CASE("build_mf(3) round trip") { CHECK(parse_machine(serialize(build_mf(3))) == Machine(build_mf(3))); }

TEST_CASE("empty text names the missing version") {
  try {
    parse_machine("");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("missing format-version") != std::string::npos);
  }
  try {
    parse_machine("{}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("missing format-version") != std::string::npos);
  }
}

TEST_CASE("bad direction names the transition") {
  const std::string text = R"({"format-version": 1, "kind": "fla", "alphabet": ["a"], "states": [0],
    "initial": 0, "finals": [0],
    "transitions": [{"from": 0, "read": "a", "to": 0, "write": "Z", "move": 2}]})";
  try {
    parse_machine(text);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.where().find("transitions[0]") != std::string::npos);
  }
}

TEST_CASE("unknown kind and duplicate states") {
  CHECK_THROWS_AS(parse_machine(R"({"format-version": 1, "kind": "pda", "alphabet": ["a"], "states": [0],
    "initial": 0, "finals": [], "transitions": []})"),
                  ParseError);
  CHECK_THROWS_AS(parse_machine(R"({"format-version": 1, "kind": "nfa", "alphabet": ["a"], "states": [0, 0],
    "initial": 0, "finals": [], "transitions": []})"),
                  ParseError);
  CHECK_THROWS_AS(parse_machine(R"({"format-version": 2, "kind": "nfa", "alphabet": ["a"], "states": [0],
    "initial": 0, "finals": [], "transitions": []})"),
                  ParseError);
}

TEST_CASE("golden file for the Meyer-Fischer automaton") {
  const auto golden = load_machine(FLA_TEST_DATA "/mf3.mach");
  CHECK(golden == Machine(build_mf(3)));
}

}
