#include "twa/engine.hh"

#include <algorithm>
#include <unordered_map>

namespace twa {

std::size_t ConfigurationHash::operator()(const Configuration& c) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL ^ c.state;
  for (Symbol s : c.tape) h = (h ^ (s + 0x9e3779b97f4a7c15ULL)) * 0x100000001b3ULL;
  return h ^ c.tape.size();
}

std::string_view to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::Dead: return "dead";
    case RejectReason::SentinelReject: return "sentinel";
    case RejectReason::Exhausted: return "exhausted";
  }
  return "?";
}

ScanResult scan(const Automaton& a, StateId q, std::span<const Symbol> tape) {
  const PrefixTrie& trie = a.translucent_trie(q);
  std::vector<std::size_t> cuts;
  std::size_t block = 0;
  std::int32_t node = PrefixTrie::kRoot;
  for (std::size_t pos = 0; pos < tape.size(); ++pos) {
    const Symbol s = tape[pos];
    if (node == PrefixTrie::kRoot && a.can_read(q, s)) {
      return ReadAt{pos, s, Word(tape.begin(), tape.begin() + static_cast<std::ptrdiff_t>(pos)),
                    Word(tape.begin() + static_cast<std::ptrdiff_t>(pos) + 1, tape.end())};
    }
    node = trie.next(node, s);
    if (node == PrefixTrie::kNone) return Dead{block, false, pos + 1};
    if (trie.terminal(node)) {
      cuts.push_back(pos + 1);
      node = PrefixTrie::kRoot;
      block = pos + 1;
    }
  }
  if (node != PrefixTrie::kRoot) return Dead{block, true, tape.size()};

  AllTranslucent all;
  std::size_t start = 0;
  for (std::size_t cut : cuts) {
    all.factorization.emplace_back(tape.begin() + static_cast<std::ptrdiff_t>(start),
                                   tape.begin() + static_cast<std::ptrdiff_t>(cut));
    start = cut;
  }
  return all;
}

namespace {

struct Expansion {
  StepOutcome outcome;
  Action action;
};

Expansion expand(const Automaton& a, const Configuration& c) {
  ScanResult r = scan(a, c.state, c.tape);
  if (auto* read = std::get_if<ReadAt>(&r)) {
    Word rest = std::move(read->prefix);
    rest.insert(rest.end(), read->suffix.begin(), read->suffix.end());
    Successors next;
    for (StateId p : a.successors(c.state, read->letter)) next.configurations.push_back({p, rest});
    return {std::move(next), Action{ActionKind::Read, read->letter, read->skip_len, {}}};
  }
  if (auto* dead = std::get_if<Dead>(&r)) {
    return {RejectStep{RejectReason::Dead, dead->position},
            Action{ActionKind::Reject, 0, dead->position, RejectReason::Dead}};
  }
  const SentinelAction& s = a.sentinel(c.state);
  switch (s.kind) {
    case SentinelKind::Accept:
      return {AcceptStep{}, Action{ActionKind::Accept, 0, 0, {}}};
    case SentinelKind::Reject:
      return {RejectStep{RejectReason::SentinelReject, 0},
              Action{ActionKind::Reject, 0, 0, RejectReason::SentinelReject}};
    case SentinelKind::Goto:
      break;
  }
  Successors next;
  next.via_sentinel = true;
  for (StateId p : s.targets) next.configurations.push_back({p, c.tape});
  return {std::move(next), Action{ActionKind::Sentinel, 0, 0, {}}};
}

}  // namespace

StepOutcome step(const Automaton& a, const Configuration& c) { return expand(a, c).outcome; }

RunResult run_deterministic(const Automaton& a, std::span<const Symbol> input) {
  if (!classify(a).deterministic) throw NotDeterministic("automaton is not deterministic");

  RunResult result;
  Configuration c{a.initial_states().front(), Word(input.begin(), input.end())};
  std::vector<StateId> at_sentinel;  // since the last letter read
  while (true) {
    Expansion e = expand(a, c);
    if (std::holds_alternative<AcceptStep>(e.outcome)) {
      result.trace.push_back({std::move(c), e.action, std::nullopt});
      result.verdict = Verdict::Accepted;
      ++result.steps;
      return result;
    }
    if (auto* rej = std::get_if<RejectStep>(&e.outcome)) {
      result.reason = rej->reason;
      result.trace.push_back({std::move(c), e.action, std::nullopt});
      result.verdict = Verdict::Rejected;
      ++result.steps;
      return result;
    }
    auto& next = std::get<Successors>(e.outcome);
    if (next.via_sentinel) {
      auto seen = std::find(at_sentinel.begin(), at_sentinel.end(), c.state);
      if (seen != at_sentinel.end()) {
        result.verdict = Verdict::Diverged;
        result.cycle.assign(seen, at_sentinel.end());
        return result;
      }
      at_sentinel.push_back(c.state);
      ++result.sentinel_steps;
    } else {
      at_sentinel.clear();
    }
    Configuration to = std::move(next.configurations.front());
    result.trace.push_back({std::move(c), e.action, to});
    ++result.steps;
    c = std::move(to);
  }
}

SearchResult run_nondeterministic(const Automaton& a, std::span<const Symbol> input) {
  struct Node {
    Configuration config;
    std::ptrdiff_t parent;
    Action action;  // the step parent ⊢ config
  };
  std::vector<Node> nodes;
  std::unordered_map<Configuration, std::size_t, ConfigurationHash> index;
  auto visit = [&](Configuration c, std::ptrdiff_t parent, Action action) {
    if (index.emplace(c, nodes.size()).second) nodes.push_back({std::move(c), parent, action});
  };

  const Word tape(input.begin(), input.end());
  for (StateId q : a.initial_states()) visit({q, tape}, -1, {});

  SearchResult result;
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    Expansion e = expand(a, nodes[head].config);
    if (std::holds_alternative<AcceptStep>(e.outcome)) {
      Trace witness;
      witness.push_back({nodes[head].config, e.action, std::nullopt});
      for (auto i = static_cast<std::ptrdiff_t>(head); nodes[static_cast<std::size_t>(i)].parent >= 0;
           i = nodes[static_cast<std::size_t>(i)].parent) {
        const Node& n = nodes[static_cast<std::size_t>(i)];
        witness.push_back({nodes[static_cast<std::size_t>(n.parent)].config, n.action, n.config});
      }
      std::reverse(witness.begin(), witness.end());
      result.accepted = true;
      result.witness = std::move(witness);
      break;
    }
    if (auto* next = std::get_if<Successors>(&e.outcome)) {
      result.max_branching = std::max(result.max_branching, next->configurations.size());
      for (auto& c : next->configurations)
        visit(std::move(c), static_cast<std::ptrdiff_t>(head), e.action);
    }
  }
  result.configurations = nodes.size();
  return result;
}

bool accepts(const Automaton& a, std::span<const Symbol> input) {
  return run_nondeterministic(a, input).accepted;
}

bool check_append_property(const Automaton& a, const Configuration& c,
                           std::span<const Symbol> w) {
  Expansion here = expand(a, c);
  if (here.action.kind != ActionKind::Read) throw NotALetterStep("configuration does not read a letter");

  Configuration extended{c.state, c.tape};
  extended.tape.insert(extended.tape.end(), w.begin(), w.end());
  Expansion there = expand(a, extended);
  const auto* after = std::get_if<Successors>(&there.outcome);
  if (after == nullptr || after->via_sentinel) return false;

  for (const auto& succ : std::get<Successors>(here.outcome).configurations) {
    Configuration want{succ.state, succ.tape};
    want.tape.insert(want.tape.end(), w.begin(), w.end());
    if (std::find(after->configurations.begin(), after->configurations.end(), want) ==
        after->configurations.end())
      return false;
  }
  return true;
}

}  // namespace twa
