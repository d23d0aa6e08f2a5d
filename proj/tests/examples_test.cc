#include <catch2/catch_amalgamated.hpp>

#include "support/test_support.hh"
#include "twa/twa.hh"

using namespace twa;
using namespace twa::testing;

namespace {

std::vector<std::string> spelled(const Automaton& a, const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(a.alphabet().spell(w));
  return out;
}

Automaton empty_language() {
  AutomatonBuilder b({"a", "b"});
  b.state("z").initial("z").reject("z");
  return b.build();
}

}  // namespace

TEST_CASE("A_ex accepts exactly the powers (ab)^(2^n)") {
  const Automaton ex = build_a_ex();
  CHECK(spelled(ex, enumerate_accepted(ex, 12)) == std::vector<std::string>{"abab", "abababab"});
  CHECK(accepts(ex, word(ex, power("ab", 8))));
  CHECK(accepts(ex, word(ex, power("ab", 16))));
  for (std::size_t m = 1; m <= 16; ++m) {
    const bool power_of_two = m >= 2 && (m & (m - 1)) == 0;
    CHECK(accepts(ex, word(ex, power("ab", m))) == power_of_two);
  }
  CHECK(compare_language(ex, over_alphabet(ex.alphabet(), is_lex), 12).agrees());
}

TEST_CASE("A_2lin1 accepts a^(2n+1) b^(2n+1)") {
  const Automaton a = build_a_2lin1();
  CHECK(accepts(a, word(a, "ab")));
  CHECK(accepts(a, word(a, "aaabbb")));
  CHECK_FALSE(accepts(a, word(a, "aabb")));
  CHECK_FALSE(accepts(a, {}));
  CHECK(compare_language(a, over_alphabet(a.alphabet(), is_l2lin1), 14).agrees());
}

TEST_CASE("A_2lin accepts a^(2n) b^(2n)") {
  const Automaton a = build_a_2lin();
  CHECK(classify(a).deterministic);
  CHECK(classify(a).repetitive);
  CHECK(compare_language(a, over_alphabet(a.alphabet(), is_l2lin), 14).agrees());
  CHECK(spelled(a, enumerate_accepted(a, 16)) ==
        std::vector<std::string>{"aabb", "aaaabbbb", "aaaaaabbbbbb", "aaaaaaaabbbbbbbb"});
}

TEST_CASE("union for a^n b^n") {
  const Automaton u = build_l_lin_union();
  CHECK_FALSE(classify(u).deterministic);
  std::vector<std::string> expected;
  for (std::size_t n = 1; n <= 7; ++n) expected.push_back(power("a", n) + power("b", n));
  CHECK(spelled(u, enumerate_accepted(u, 14)) == expected);
  CHECK(compare_language(u, over_alphabet(u.alphabet(), is_llin), 12).agrees());
}

TEST_CASE("build_union: identities") {
  const Automaton ex = build_a_ex();
  SECTION("idempotent") {
    const Automaton twice = build_union(ex, ex);
    CHECK(enumerate_accepted(twice, 10) == enumerate_accepted(ex, 10));
    CHECK(twice.num_states() == 2 * ex.num_states());
  }
  SECTION("empty language is neutral") {
    const Automaton u = build_union(ex, empty_language());
    CHECK(enumerate_accepted(u, 10) == enumerate_accepted(ex, 10));
  }
  SECTION("alphabets must match") {
    AutomatonBuilder b({"a", "c"});
    b.state("z").initial("z");
    CHECK_THROWS_AS(build_union(ex, b.build()), AlphabetMismatch);
  }
}

TEST_CASE("L_vee NFAwtl") {
  const Automaton v = build_l_vee_nfawtl();
  const ClassReport r = classify(v);
  CHECK_FALSE(r.deterministic);
  CHECK_FALSE(r.repetitive);
  CHECK(r.ell <= 1);
  for (const char* yes : {"", "ab", "ba", "abb", "bab", "bba", "aabbbb", "babbab"}) CHECK(accepts(v, word(v, yes)));
  for (const char* no : {"a", "b", "aab", "abbbb", "bbbba"}) CHECK_FALSE(accepts(v, word(v, no)));
  CHECK(compare_language(v, over_alphabet(v.alphabet(), is_lvee), 10).agrees());
}

TEST_CASE("examples by name") {
  for (const auto& name : example_names()) CHECK_NOTHROW(example_by_name(name));
  CHECK_THROWS_AS(example_by_name("nope"), Error);
}
