#include "twa/automaton.hh"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace twa {

namespace {

std::string join_tokens(const std::vector<std::string>& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += '.';
    out += word[i];
  }
  return out;
}

template <typename T>
void push_unique(std::vector<T>& v, const T& x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

}  // namespace

void AutomatonDescription::default_missing_sentinels() {
  std::set<std::string> covered;
  for (const auto& s : sentinels) covered.insert(s.state);
  for (const auto& q : states) {
    if (covered.insert(q.name).second) sentinels.push_back({q.name, SentinelKind::Reject, {}, q.line});
  }
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::EmptyTranslucentWord: return "EmptyTranslucentWord";
    case ViolationKind::PrefixCodeViolation: return "PrefixCodeViolation";
    case ViolationKind::ReadableLetterPrefix: return "ReadableLetterPrefix";
    case ViolationKind::UndeclaredState: return "UndeclaredState";
    case ViolationKind::UndeclaredToken: return "UndeclaredToken";
    case ViolationKind::MissingSentinel: return "MissingSentinel";
    case ViolationKind::EmptyInitialSet: return "EmptyInitialSet";
    case ViolationKind::DuplicateDeclaration: return "DuplicateDeclaration";
    case ViolationKind::ConflictingSentinel: return "ConflictingSentinel";
    case ViolationKind::EmptyGotoSet: return "EmptyGotoSet";
    case ViolationKind::InvalidTokenName: return "InvalidTokenName";
  }
  return "?";
}

std::string Violation::message() const {
  std::ostringstream os;
  os << to_string(kind);
  switch (kind) {
    case ViolationKind::PrefixCodeViolation:
      os << ": in translucent set of " << state << ", '" << subject << "' is a prefix of '"
         << other << "'";
      break;
    case ViolationKind::ReadableLetterPrefix:
      os << ": translucent word '" << subject << "' of " << state
         << " begins with readable letter '" << other << "'";
      break;
    case ViolationKind::EmptyTranslucentWord:
      os << ": translucent set of " << state << " contains the empty word";
      break;
    case ViolationKind::UndeclaredState:
      os << ": state '" << subject << "' is not declared";
      break;
    case ViolationKind::UndeclaredToken:
      os << ": token '" << subject << "' is not in the alphabet";
      break;
    case ViolationKind::MissingSentinel:
      os << ": state " << state << " has no sentinel action";
      break;
    case ViolationKind::EmptyInitialSet:
      os << ": no initial state";
      break;
    case ViolationKind::DuplicateDeclaration:
      os << ": '" << subject << "' declared twice";
      break;
    case ViolationKind::ConflictingSentinel:
      os << ": state " << state << " has conflicting sentinel actions";
      break;
    case ViolationKind::EmptyGotoSet:
      os << ": sentinel goto of " << state << " has no target";
      break;
    case ViolationKind::InvalidTokenName:
      os << ": '" << subject << "' is not a valid token name";
      break;
  }
  return os.str();
}

std::vector<std::pair<std::size_t, std::size_t>> prefix_pairs(
    std::span<const std::vector<std::string>> words) {
  struct Node {
    std::map<std::string, std::size_t> children;
    std::optional<std::size_t> word;
  };
  std::vector<Node> nodes(1);
  std::vector<std::size_t> ends(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::size_t n = 0;
    for (const auto& tok : words[i]) {
      auto it = nodes[n].children.find(tok);
      if (it == nodes[n].children.end()) {
        nodes.emplace_back();
        it = nodes[n].children.emplace(tok, nodes.size() - 1).first;
      }
      n = it->second;
    }
    if (!nodes[n].word) nodes[n].word = i;
    ends[i] = n;
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::size_t n = 0;
    for (std::size_t d = 0; d + 1 <= words[i].size(); ++d) {
      if (d > 0 && nodes[n].word) out.emplace_back(*nodes[n].word, i);
      n = nodes[n].children.at(words[i][d]);
    }
  }
  return out;
}

std::vector<Violation> validate(const AutomatonDescription& d) {
  std::vector<Violation> out;
  auto report = [&](ViolationKind k, std::string state, std::string subject, std::string other,
                    int line) {
    out.push_back({k, std::move(state), std::move(subject), std::move(other), line});
  };

  std::set<std::string> tokens;
  for (const auto& t : d.alphabet) {
    if (!is_valid_token_name(t.name)) {
      report(ViolationKind::InvalidTokenName, "", t.name, "", t.line);
    } else if (!tokens.insert(t.name).second) {
      report(ViolationKind::DuplicateDeclaration, "", t.name, "", t.line);
    }
  }
  std::set<std::string> states;
  for (const auto& q : d.states) {
    if (!states.insert(q.name).second)
      report(ViolationKind::DuplicateDeclaration, q.name, q.name, "", q.line);
  }
  auto check_state = [&](const std::string& q, int line) {
    if (states.count(q)) return true;
    report(ViolationKind::UndeclaredState, "", q, "", line);
    return false;
  };
  auto check_token = [&](const std::string& t, int line) {
    if (tokens.count(t)) return true;
    report(ViolationKind::UndeclaredToken, "", t, "", line);
    return false;
  };

  if (d.initials.empty()) report(ViolationKind::EmptyInitialSet, "", "", "", 0);
  for (const auto& i : d.initials) check_state(i.name, i.line);

  // τ(q) as a set, each word with the line that introduced it.
  std::map<std::string, std::vector<std::pair<std::vector<std::string>, int>>> tau;
  for (const auto& t : d.translucent) {
    const bool state_ok = check_state(t.state, t.line);
    for (const auto& w : t.words) {
      if (w.empty()) {
        report(ViolationKind::EmptyTranslucentWord, t.state, "", "", t.line);
        continue;
      }
      bool ok = true;
      for (const auto& tok : w) ok = check_token(tok, t.line) && ok;
      if (!ok || !state_ok) continue;
      auto& set = tau[t.state];
      if (std::none_of(set.begin(), set.end(), [&](const auto& e) { return e.first == w; }))
        set.emplace_back(w, t.line);
    }
  }

  std::map<std::string, std::set<std::string>> readable;
  for (const auto& tr : d.delta) {
    const bool from_ok = check_state(tr.from, tr.line);
    const bool tok_ok = check_token(tr.token, tr.line);
    const bool to_ok = check_state(tr.to, tr.line);
    if (from_ok && tok_ok && to_ok) readable[tr.from].insert(tr.token);
  }

  std::map<std::string, const AutomatonDescription::Sentinel*> sentinel_of;
  for (const auto& s : d.sentinels) {
    bool ok = check_state(s.state, s.line);
    if (s.kind == SentinelKind::Goto) {
      if (s.targets.empty()) {
        report(ViolationKind::EmptyGotoSet, s.state, "", "", s.line);
        ok = false;
      }
      for (const auto& t : s.targets) ok = check_state(t, s.line) && ok;
    }
    if (!ok) continue;
    auto [it, inserted] = sentinel_of.emplace(s.state, &s);
    if (!inserted) {
      const auto& prev = *it->second;
      std::set<std::string> a(prev.targets.begin(), prev.targets.end());
      std::set<std::string> b(s.targets.begin(), s.targets.end());
      if (prev.kind != s.kind || a != b)
        report(ViolationKind::ConflictingSentinel, s.state, "", "", s.line);
    }
  }
  std::set<std::string> seen;
  for (const auto& q : d.states) {
    if (!seen.insert(q.name).second) continue;
    const bool has = std::any_of(d.sentinels.begin(), d.sentinels.end(),
                                 [&](const auto& s) { return s.state == q.name; });
    if (!has) report(ViolationKind::MissingSentinel, q.name, "", "", q.line);
  }

  for (const auto& q : d.states) {
    auto it = tau.find(q.name);
    if (it == tau.end()) continue;
    const auto& entries = it->second;
    std::vector<std::vector<std::string>> words;
    for (const auto& e : entries) words.push_back(e.first);
    for (auto [shorter, longer] : prefix_pairs(words)) {
      report(ViolationKind::PrefixCodeViolation, q.name, join_tokens(words[shorter]),
             join_tokens(words[longer]), entries[longer].second);
    }
    const auto& letters = readable[q.name];
    for (const auto& e : entries) {
      if (letters.count(e.first.front()))
        report(ViolationKind::ReadableLetterPrefix, q.name, join_tokens(e.first),
               e.first.front(), e.second);
    }
    tau.erase(it);  // duplicated state declarations report once
  }
  return out;
}

InvalidAutomaton::InvalidAutomaton(std::vector<Violation> violations)
    : Error([&] {
        std::string msg = "invalid automaton";
        for (const auto& v : violations) msg += "\n  " + v.message();
        return msg;
      }()),
      violations_(std::move(violations)) {}

PrefixTrie::PrefixTrie(std::size_t alphabet_size, std::span<const Word> words)
    : width_(alphabet_size), edges_(alphabet_size, kNone), terminal_(1, false) {
  for (const auto& w : words) {
    std::int32_t node = kRoot;
    for (Symbol s : w) {
      auto& e = edges_[static_cast<std::size_t>(node) * width_ + s];
      if (e == kNone) {
        e = static_cast<std::int32_t>(terminal_.size());
        terminal_.push_back(false);
        edges_.resize(edges_.size() + width_, kNone);
      }
      node = edges_[static_cast<std::size_t>(node) * width_ + s];
    }
    terminal_[static_cast<std::size_t>(node)] = true;
  }
}

Automaton Automaton::from_description(const AutomatonDescription& d) {
  if (auto violations = validate(d); !violations.empty()) throw InvalidAutomaton(std::move(violations));

  Automaton a;
  std::vector<std::string> names;
  for (const auto& t : d.alphabet) names.push_back(t.name);
  a.alphabet_ = Alphabet(std::move(names));
  for (const auto& q : d.states) {
    a.state_index_.emplace(q.name, static_cast<StateId>(a.state_names_.size()));
    a.state_names_.push_back(q.name);
  }
  const std::size_t n = a.state_names_.size();
  const std::size_t sigma = a.alphabet_.size();
  auto id = [&](const std::string& q) { return a.state_index_.at(q); };

  for (const auto& i : d.initials) push_unique(a.initials_, id(i.name));

  a.translucent_.resize(n);
  for (const auto& t : d.translucent) {
    auto& set = a.translucent_[id(t.state)];
    for (const auto& w : t.words) push_unique(set, a.alphabet_.encode(w));
  }
  for (std::size_t q = 0; q < n; ++q) a.tries_.emplace_back(sigma, a.translucent_[q]);

  a.delta_.resize(n * sigma);
  for (const auto& tr : d.delta)
    push_unique(a.delta_[id(tr.from) * sigma + *a.alphabet_.find(tr.token)], id(tr.to));

  a.sentinel_.resize(n);
  std::vector<bool> set(n, false);
  for (const auto& s : d.sentinels) {
    const StateId q = id(s.state);
    if (set[q]) continue;
    set[q] = true;
    SentinelAction action{s.kind, {}};
    for (const auto& t : s.targets) push_unique(action.targets, id(t));
    a.sentinel_[q] = std::move(action);
  }
  return a;
}

std::optional<StateId> Automaton::find_state(std::string_view name) const {
  auto it = state_index_.find(std::string(name));
  if (it == state_index_.end()) return std::nullopt;
  return it->second;
}

AutomatonDescription Automaton::to_description() const {
  AutomatonDescription d;
  for (const auto& t : alphabet_.names()) d.alphabet.push_back({t, 0});
  for (const auto& q : state_names_) d.states.push_back({q, 0});
  for (StateId q : initials_) d.initials.push_back({state_names_[q], 0});
  for (StateId q = 0; q < num_states(); ++q) {
    if (translucent_[q].empty()) continue;
    AutomatonDescription::Translucent t{state_names_[q], {}, 0};
    for (const auto& w : translucent_[q]) {
      std::vector<std::string> names;
      for (Symbol s : w) names.push_back(alphabet_.name(s));
      t.words.push_back(std::move(names));
    }
    d.translucent.push_back(std::move(t));
  }
  for (StateId q = 0; q < num_states(); ++q) {
    for (Symbol s = 0; s < alphabet_.size(); ++s) {
      for (StateId p : successors(q, s))
        d.delta.push_back({state_names_[q], alphabet_.name(s), state_names_[p], 0});
    }
  }
  for (StateId q = 0; q < num_states(); ++q) {
    AutomatonDescription::Sentinel s{state_names_[q], sentinel_[q].kind, {}, 0};
    for (StateId p : sentinel_[q].targets) s.targets.push_back(state_names_[p]);
    d.sentinels.push_back(std::move(s));
  }
  return d;
}

ClassReport classify(const Automaton& a) {
  ClassReport r;
  r.deterministic = a.initial_states().size() == 1;
  for (StateId q = 0; q < a.num_states(); ++q) {
    for (Symbol s = 0; s < a.alphabet().size(); ++s) {
      if (a.successors(q, s).size() > 1) r.deterministic = false;
    }
    const auto& sentinel = a.sentinel(q);
    if (sentinel.kind == SentinelKind::Goto) {
      r.repetitive = true;
      if (sentinel.targets.size() != 1) r.deterministic = false;
    }
    r.k = std::max(r.k, a.translucent(q).size());
    for (const auto& w : a.translucent(q)) r.ell = std::max(r.ell, w.size());
  }
  return r;
}

AutomatonBuilder::AutomatonBuilder(std::vector<std::string> alphabet) {
  for (auto& t : alphabet) {
    if (t.size() != 1) contiguous_ = false;
    description_.alphabet.push_back({std::move(t), 0});
  }
}

AutomatonBuilder& AutomatonBuilder::state(std::string id) {
  description_.states.push_back({std::move(id), 0});
  return *this;
}

AutomatonBuilder& AutomatonBuilder::states(std::initializer_list<std::string> ids) {
  for (const auto& id : ids) state(id);
  return *this;
}

AutomatonBuilder& AutomatonBuilder::initial(std::string id) {
  description_.initials.push_back({std::move(id), 0});
  return *this;
}

AutomatonBuilder& AutomatonBuilder::translucent(std::string id,
                                                std::vector<std::string> spelled_words) {
  AutomatonDescription::Translucent t{std::move(id), {}, 0};
  for (const auto& w : spelled_words) t.words.push_back(split_spelled_word(w, contiguous_));
  description_.translucent.push_back(std::move(t));
  return *this;
}

AutomatonBuilder& AutomatonBuilder::delta(std::string from, std::string token, std::string to) {
  description_.delta.push_back({std::move(from), std::move(token), std::move(to), 0});
  return *this;
}

AutomatonBuilder& AutomatonBuilder::accept(std::string id) {
  description_.sentinels.push_back({std::move(id), SentinelKind::Accept, {}, 0});
  return *this;
}

AutomatonBuilder& AutomatonBuilder::reject(std::string id) {
  description_.sentinels.push_back({std::move(id), SentinelKind::Reject, {}, 0});
  return *this;
}

AutomatonBuilder& AutomatonBuilder::go_to(std::string id, std::vector<std::string> targets) {
  description_.sentinels.push_back({std::move(id), SentinelKind::Goto, std::move(targets), 0});
  return *this;
}

Automaton AutomatonBuilder::build() const {
  AutomatonDescription d = description_;
  d.default_missing_sentinels();
  return Automaton::from_description(d);
}

}  // namespace twa
