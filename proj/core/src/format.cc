#include "twa/format.hh"

#include <algorithm>
#include <map>
#include <sstream>

namespace twa {

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : Error([&] {
        std::string msg = "cannot load automaton";
        for (const auto& d : diagnostics)
          msg += "\n  line " + std::to_string(d.line) + ": " + d.message;
        return msg;
      }()),
      diagnostics_(std::move(diagnostics)) {}

namespace {

std::vector<std::string> fields_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string f; in >> f;) out.push_back(f);
  return out;
}

}  // namespace

Automaton parse_automaton(std::string_view text) {
  AutomatonDescription d;
  std::vector<Diagnostic> diags;
  auto syntax = [&](int line, std::string msg) { diags.push_back({line, "SyntaxError", std::move(msg)}); };

  // First declaration line of every token and state, for the use-before-
  // declaration check.
  std::map<std::string, int> token_decl, state_decl;
  struct Use {
    std::string name;
    int line;
    bool is_state;
  };
  std::vector<Use> uses;
  bool contiguous = true;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto f = fields_of(raw);
    if (f.empty()) continue;
    const std::string& directive = f[0];

    if (directive == "alphabet") {
      if (f.size() < 2) {
        syntax(line, "'alphabet' needs at least one token");
        continue;
      }
      for (std::size_t i = 1; i < f.size(); ++i) {
        if (f[i].size() != 1) contiguous = false;
        token_decl.emplace(f[i], line);
        d.alphabet.push_back({f[i], line});
      }
    } else if (directive == "state") {
      if (f.size() != 2) {
        syntax(line, "'state' takes exactly one state id");
        continue;
      }
      state_decl.emplace(f[1], line);
      d.states.push_back({f[1], line});
    } else if (directive == "initial") {
      if (f.size() < 2) {
        syntax(line, "'initial' needs a state id");
        continue;
      }
      for (std::size_t i = 1; i < f.size(); ++i) {
        uses.push_back({f[i], line, true});
        d.initials.push_back({f[i], line});
      }
    } else if (directive == "translucent") {
      if (f.size() < 3) {
        syntax(line, "'translucent' needs a state and at least one word");
        continue;
      }
      uses.push_back({f[1], line, true});
      AutomatonDescription::Translucent t{f[1], {}, line};
      for (std::size_t i = 2; i < f.size(); ++i) {
        auto tokens = split_spelled_word(f[i], contiguous);
        for (const auto& tok : tokens) {
          if (!tok.empty()) uses.push_back({tok, line, false});
        }
        if (std::any_of(tokens.begin(), tokens.end(), [](const auto& s) { return s.empty(); })) {
          syntax(line, "empty token in word '" + f[i] + "'");
          continue;
        }
        t.words.push_back(std::move(tokens));
      }
      d.translucent.push_back(std::move(t));
    } else if (directive == "delta") {
      if (f.size() != 4) {
        syntax(line, "'delta' takes <state> <token> <state>");
        continue;
      }
      uses.push_back({f[1], line, true});
      uses.push_back({f[2], line, false});
      uses.push_back({f[3], line, true});
      d.delta.push_back({f[1], f[2], f[3], line});
    } else if (directive == "sentinel") {
      if (f.size() < 3) {
        syntax(line, "'sentinel' takes <state> accept|reject|goto <state>...");
        continue;
      }
      uses.push_back({f[1], line, true});
      AutomatonDescription::Sentinel s{f[1], SentinelKind::Reject, {}, line};
      if (f[2] == "accept" && f.size() == 3) {
        s.kind = SentinelKind::Accept;
      } else if (f[2] == "reject" && f.size() == 3) {
        s.kind = SentinelKind::Reject;
      } else if (f[2] == "goto") {
        s.kind = SentinelKind::Goto;
        for (std::size_t i = 3; i < f.size(); ++i) {
          uses.push_back({f[i], line, true});
          s.targets.push_back(f[i]);
        }
      } else {
        syntax(line, "unknown sentinel action '" + f[2] + "'");
        continue;
      }
      d.sentinels.push_back(std::move(s));
    } else {
      syntax(line, "unknown directive '" + directive + "'");
    }
  }
  const int last_line = std::max(line, 1);

  for (const auto& u : uses) {
    const auto& decls = u.is_state ? state_decl : token_decl;
    auto it = decls.find(u.name);
    if (it != decls.end() && it->second > u.line) {
      diags.push_back({u.line, u.is_state ? "UndeclaredState" : "UndeclaredToken",
                       "'" + u.name + "' is used before its declaration on line " +
                           std::to_string(it->second)});
    }
  }

  d.default_missing_sentinels();
  for (const auto& v : validate(d)) {
    diags.push_back({v.line > 0 ? v.line : last_line, std::string(to_string(v.kind)), v.message()});
  }
  if (!diags.empty()) {
    std::stable_sort(diags.begin(), diags.end(),
                     [](const Diagnostic& x, const Diagnostic& y) { return x.line < y.line; });
    throw ParseError(std::move(diags));
  }
  return Automaton::from_description(d);
}

std::string serialize(const Automaton& a) {
  std::ostringstream os;
  const Alphabet& sigma = a.alphabet();
  os << "alphabet";
  for (const auto& t : sigma.names()) os << ' ' << t;
  os << '\n';
  for (StateId q = 0; q < a.num_states(); ++q) os << "state " << a.state_name(q) << '\n';
  for (StateId q : a.initial_states()) os << "initial " << a.state_name(q) << '\n';
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (a.translucent(q).empty()) continue;
    os << "translucent " << a.state_name(q);
    for (const auto& w : a.translucent(q)) os << ' ' << sigma.spell(w);
    os << '\n';
  }
  for (StateId q = 0; q < a.num_states(); ++q) {
    for (Symbol s = 0; s < sigma.size(); ++s) {
      for (StateId p : a.successors(q, s))
        os << "delta " << a.state_name(q) << ' ' << sigma.name(s) << ' ' << a.state_name(p) << '\n';
    }
  }
  for (StateId q = 0; q < a.num_states(); ++q) {
    const auto& s = a.sentinel(q);
    switch (s.kind) {
      case SentinelKind::Reject:
        break;
      case SentinelKind::Accept:
        os << "sentinel " << a.state_name(q) << " accept\n";
        break;
      case SentinelKind::Goto:
        os << "sentinel " << a.state_name(q) << " goto";
        for (StateId p : s.targets) os << ' ' << a.state_name(p);
        os << '\n';
        break;
    }
  }
  return os.str();
}

std::string format_configuration(const Automaton& a, const Configuration& c) {
  std::string out = a.state_name(c.state);
  out += ' ';
  if (!c.tape.empty()) {
    out += a.alphabet().spell(c.tape);
    out += ' ';
  }
  out += kSentinelGlyph;
  return out;
}

std::string format_step(const Automaton& a, const TraceEntry& e) {
  std::string out = format_configuration(a, e.from);
  switch (e.action.kind) {
    case ActionKind::Read:
      out += "  --read " + a.alphabet().name(e.action.letter) + "@" + std::to_string(e.action.position) + "-->  ";
      break;
    case ActionKind::Sentinel:
    case ActionKind::Accept:
      out += "  --sentinel-->  ";
      break;
    case ActionKind::Reject:
      if (e.action.reason == RejectReason::Dead)
        out += "  --dead@" + std::to_string(e.action.position) + "-->  ";
      else
        out += "  --sentinel-->  ";
      break;
  }
  switch (e.action.kind) {
    case ActionKind::Accept:
      out += "ACCEPT";
      break;
    case ActionKind::Reject:
      out += "REJECT(" + std::string(to_string(e.action.reason)) + ")";
      break;
    default:
      if (e.to) out += format_configuration(a, *e.to);
      break;
  }
  return out;
}

std::string format_verdict(const RunResult& r) {
  switch (r.verdict) {
    case Verdict::Accepted: return "ACCEPT";
    case Verdict::Diverged: return "DIVERGED";
    case Verdict::Rejected: break;
  }
  return "REJECT(" + std::string(to_string(r.reason)) + ")";
}

std::string format_run(const Automaton& a, const RunResult& r) {
  std::string out;
  for (const auto& e : r.trace) out += format_step(a, e) + '\n';
  if (r.trace.empty() || r.verdict == Verdict::Diverged) out += format_verdict(r) + '\n';
  return out;
}

}  // namespace twa
