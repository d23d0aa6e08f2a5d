#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "support/test_support.hh"
#include "twa/twa.hh"

using namespace twa;
using namespace twa::testing;

namespace {

std::vector<Diagnostic> diagnostics_of(std::string_view text) {
  try {
    parse_automaton(text);
  } catch (const ParseError& e) {
    return e.diagnostics();
  }
  return {};
}

void check_same_language(const Automaton& a, const Automaton& b, std::size_t max_len) {
  REQUIRE(a.alphabet().names() == b.alphabet().names());
  for_each_word(a.alphabet().size(), max_len, [&](const Word& w) { REQUIRE(accepts(a, w) == accepts(b, w)); });
}

}  // namespace

TEST_CASE("round trip on the built-in automata") {
  for (const auto& name : example_names()) {
    const Automaton a = example_by_name(name);
    const Automaton b = parse_automaton(serialize(a));
    CHECK(serialize(b) == serialize(a));
    check_same_language(a, b, 8);
  }
}

TEST_CASE("round trip on random automata") {
  std::mt19937 rng(29);
  for (int i = 0; i < 50; ++i) {
    const Automaton a = random_automaton(rng);
    check_same_language(a, parse_automaton(serialize(a)), 8);
  }
}

TEST_CASE("serialize is a fixed point") {
  for (const Automaton& a : {build_a_ex(), compile_pcp({{{"a", "baa"}, {"ab", "aa"}, {"bba", "bb"}}})}) {
    const std::string once = serialize(a);
    CHECK(serialize(parse_automaton(once)) == once);
  }
}

TEST_CASE("serialize omits empty translucent sets") {
  AutomatonBuilder b({"a"});
  b.states({"p", "q"}).initial("p").delta("p", "a", "q").accept("q");
  CHECK(serialize(b.build()).find("translucent") == std::string::npos);
}

TEST_CASE("parse: A_ex from text") {
  const Automaton a = parse_automaton(R"(# (ab)^(2^n)
alphabet a b
state q0
state q1
state q2
state q3
state q4
state q5
state q6
state q7
state qf
initial q0
translucent q0 ab
translucent q2 bab
translucent q4 ab
translucent q5 ab
delta q1 a q2
delta q2 a q2
delta q3 b q4
delta q4 b q5
delta q5 b q5
delta q6 a q7
delta q7 b qf
sentinel q0 goto q1
sentinel q2 goto q3
sentinel q4 goto q6
sentinel q5 goto q1
sentinel qf accept
)");
  CHECK(serialize(a) == serialize(build_a_ex()));
}

TEST_CASE("parse: multi-character tokens") {
  const Automaton a = parse_automaton(
      "alphabet x1 a a'\nstate q\ninitial q\ntranslucent q x1 a.a'\nsentinel q accept\n");
  CHECK(accepts(a, a.alphabet().parse_word("x1.a.a'.x1")));
  CHECK_FALSE(accepts(a, a.alphabet().parse_word("a")));
}

TEST_CASE("parse: diagnostics carry lines") {
  SECTION("prefix code violation") {
    const auto d = diagnostics_of("alphabet a b\nstate q\ninitial q\ntranslucent q a ab\n");
    REQUIRE(d.size() == 1);
    CHECK(d[0].line == 4);
    CHECK(d[0].kind == "PrefixCodeViolation");
  }
  SECTION("no initial state") {
    const auto d = diagnostics_of("alphabet a\nstate q\n");
    REQUIRE(d.size() == 1);
    CHECK(d[0].kind == "EmptyInitialSet");
  }
  SECTION("syntax errors") {
    const auto d = diagnostics_of("alphabet a\nstate q r\ninitial q\nfrobnicate\nsentinel q maybe\n");
    // "state q r" declares nothing, so line 3 also refers to an unknown state.
    REQUIRE(d.size() == 4);
    CHECK(d[0] == Diagnostic{2, "SyntaxError", d[0].message});
    CHECK(d[1] == Diagnostic{3, "UndeclaredState", d[1].message});
    CHECK(d[2] == Diagnostic{4, "SyntaxError", d[2].message});
    CHECK(d[3] == Diagnostic{5, "SyntaxError", d[3].message});
  }
  SECTION("use before declaration") {
    const auto d = diagnostics_of("initial q\nalphabet a\nstate q\ndelta q b q\n");
    REQUIRE(d.size() == 2);
    CHECK(d[0] == Diagnostic{1, "UndeclaredState", d[0].message});
    CHECK(d[1] == Diagnostic{4, "UndeclaredToken", d[1].message});
  }
  SECTION("sorted by line") {
    const auto d = diagnostics_of("alphabet a b\nstate q\nstate q\ntranslucent q a ab\n");
    REQUIRE(d.size() >= 3);
    for (std::size_t i = 1; i < d.size(); ++i) CHECK(d[i - 1].line <= d[i].line);
  }
}

TEST_CASE("trace rendering") {
  const Automaton ex = build_a_ex();
  CHECK(format_configuration(ex, {*ex.find_state("q1"), word(ex, "abab")}) == "q1 abab ◁");
  CHECK(format_configuration(ex, {*ex.find_state("qf"), {}}) == "qf ◁");
  const RunResult r = run_deterministic(ex, word(ex, "abab"));
  CHECK(format_step(ex, r.trace[1]) == "q1 abab ◁  --read a@0-->  q2 bab ◁");
  CHECK(format_step(ex, r.trace[0]) == "q0 abab ◁  --sentinel-->  q1 abab ◁");
  CHECK(format_verdict(r) == "ACCEPT");
  CHECK(format_verdict(run_deterministic(ex, word(ex, "ababab"))) == "REJECT(dead)");
}
