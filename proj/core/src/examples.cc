#include "twa/examples.hh"

namespace twa {

Automaton build_a_ex() {
  AutomatonBuilder b({"a", "b"});
  b.states({"q0", "q1", "q2", "q3", "q4", "q5", "q6", "q7", "qf"})
      .initial("q0")
      .translucent("q0", {"ab"})
      .translucent("q2", {"bab"})
      .translucent("q4", {"ab"})
      .translucent("q5", {"ab"})
      .go_to("q0", {"q1"})
      .delta("q1", "a", "q2")
      .delta("q2", "a", "q2")
      .go_to("q2", {"q3"})
      .delta("q3", "b", "q4")
      .delta("q4", "b", "q5")
      .go_to("q4", {"q6"})
      .delta("q5", "b", "q5")
      .go_to("q5", {"q1"})
      .delta("q6", "a", "q7")
      .delta("q7", "b", "qf")
      .accept("qf");
  return b.build();
}

namespace {

// The A_2lin1 loop on states `p`0..`p`6.
void add_odd_loop(AutomatonBuilder& b, const std::string& p) {
  auto s = [&](int i) { return p + std::to_string(i); };
  for (int i = 0; i <= 6; ++i) b.state(s(i));
  b.translucent(s(1), {"aa", "b"})
      .translucent(s(3), {"aa", "ab"})
      .translucent(s(4), {"a", "bb"})
      .translucent(s(5), {"aa", "ab"})
      .delta(s(0), "a", s(1))
      .go_to(s(1), {s(2)})
      .delta(s(2), "b", s(6))
      .delta(s(2), "a", s(3))
      .delta(s(3), "b", s(4))
      .go_to(s(4), {s(5)})
      .delta(s(5), "b", s(0))
      .accept(s(6));
}

}  // namespace

Automaton build_a_2lin1() {
  AutomatonBuilder b({"a", "b"});
  add_odd_loop(b, "q");
  b.initial("q0");
  return b.build();
}

Automaton build_a_2lin() {
  AutomatonBuilder b({"a", "b"});
  b.states({"q0", "q1", "q2"})
      .initial("q0")
      .translucent("q0", {"aa", "bb"})
      .go_to("q0", {"q1"})
      .delta("q1", "a", "q2")
      .translucent("q2", {"a"})
      .delta("q2", "b", "r0");
  add_odd_loop(b, "r");
  // Rename r0..r6 to q3..q9 so the states read as one automaton.
  AutomatonDescription d = b.description();
  auto rename = [](std::string& id) {
    if (id.size() == 2 && id[0] == 'r') id = "q" + std::to_string(id[1] - '0' + 3);
  };
  for (auto& q : d.states) rename(q.name);
  for (auto& t : d.translucent) rename(t.state);
  for (auto& t : d.delta) {
    rename(t.from);
    rename(t.to);
  }
  for (auto& s : d.sentinels) {
    rename(s.state);
    for (auto& t : s.targets) rename(t);
  }
  d.default_missing_sentinels();
  return Automaton::from_description(d);
}

Automaton build_union(const Automaton& left, const Automaton& right) {
  if (!(left.alphabet() == right.alphabet()))
    throw AlphabetMismatch("union of automata over different alphabets");

  AutomatonDescription merged;
  auto append = [&merged](const Automaton& a, const std::string& prefix) {
    AutomatonDescription d = a.to_description();
    if (merged.alphabet.empty()) merged.alphabet = d.alphabet;
    auto r = [&](const std::string& id) { return prefix + id; };
    for (auto& q : d.states) merged.states.push_back({r(q.name), 0});
    for (auto& q : d.initials) merged.initials.push_back({r(q.name), 0});
    for (auto& t : d.translucent) merged.translucent.push_back({r(t.state), t.words, 0});
    for (auto& t : d.delta) merged.delta.push_back({r(t.from), t.token, r(t.to), 0});
    for (auto& s : d.sentinels) {
      AutomatonDescription::Sentinel copy{r(s.state), s.kind, {}, 0};
      for (auto& t : s.targets) copy.targets.push_back(r(t));
      merged.sentinels.push_back(std::move(copy));
    }
  };
  append(left, "L.");
  append(right, "R.");
  return Automaton::from_description(merged);
}

Automaton build_l_lin_union() { return build_union(build_a_2lin(), build_a_2lin1()); }

Automaton build_l_vee_nfawtl() {
  // |w|_a = |w|_b: delete one a and one b per round.
  AutomatonBuilder eq({"a", "b"});
  eq.states({"p0", "p1", "p2"})
      .initial("p0")
      .delta("p0", "a", "p1")
      .delta("p0", "b", "p2")
      .translucent("p1", {"a"})
      .delta("p1", "b", "p0")
      .translucent("p2", {"b"})
      .delta("p2", "a", "p0")
      .accept("p0");

  // |w|_b = 2|w|_a: delete one a and two b's per round.
  AutomatonBuilder twice({"a", "b"});
  twice.states({"r0", "r1", "r2", "r3", "r4"})
      .initial("r0")
      .delta("r0", "a", "r1")
      .delta("r0", "b", "r3")
      .translucent("r1", {"a"})
      .delta("r1", "b", "r2")
      .translucent("r2", {"a"})
      .delta("r2", "b", "r0")
      .translucent("r3", {"b"})
      .delta("r3", "a", "r4")
      .translucent("r4", {"a"})
      .delta("r4", "b", "r0")
      .accept("r0");

  return build_union(eq.build(), twice.build());
}

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names = {"a_ex", "a_2lin", "a_2lin1", "l_lin_union",
                                                 "l_vee_nfawtl"};
  return names;
}

Automaton example_by_name(std::string_view name) {
  if (name == "a_ex") return build_a_ex();
  if (name == "a_2lin") return build_a_2lin();
  if (name == "a_2lin1") return build_a_2lin1();
  if (name == "l_lin_union") return build_l_lin_union();
  if (name == "l_vee_nfawtl") return build_l_vee_nfawtl();
  throw Error("unknown example '" + std::string(name) + "'");
}

}  // namespace twa
