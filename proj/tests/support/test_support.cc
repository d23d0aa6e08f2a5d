#include "test_support.hh"

#include <algorithm>
#include <functional>

namespace twa::testing {

Word word(const Automaton& a, std::string_view text) { return a.alphabet().parse_word(text); }

std::string power(std::string_view unit, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) out += unit;
  return out;
}

namespace {

bool equal_at(std::span<const Symbol> tape, std::size_t at, const Word& w) {
  return at + w.size() <= tape.size() && std::equal(w.begin(), w.end(), tape.begin() + static_cast<std::ptrdiff_t>(at));
}

}  // namespace

SplitOracle split_oracle(std::span<const Word> tau, const std::vector<bool>& readable,
                         std::span<const Symbol> tape) {
  const std::size_t n = tape.size();
  // star[j]: tape[0, j) ∈ τ*; from[j]: start of the last factor.
  std::vector<bool> star(n + 1, false);
  std::vector<std::size_t> from(n + 1, 0);
  star[0] = true;
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 0; i < j && !star[j]; ++i) {
      if (!star[i]) continue;
      for (const auto& t : tau) {
        if (t.size() == j - i && equal_at(tape, i, t)) {
          star[j] = true;
          from[j] = i;
          break;
        }
      }
    }
  }

  SplitOracle out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!star[i]) continue;
    const Symbol a = tape[i];
    if (readable[a]) {
      out.cases.push_back(ReadAt{i, a, Word(tape.begin(), tape.begin() + static_cast<std::ptrdiff_t>(i)),
                                 Word(tape.begin() + static_cast<std::ptrdiff_t>(i) + 1, tape.end())});
      continue;
    }
    const bool continues = std::any_of(tau.begin(), tau.end(), [&](const Word& t) { return equal_at(tape, i, t); });
    if (!continues) out.cases.push_back(Dead{i, false, 0});
  }
  if (star[n]) {
    AllTranslucent all;
    for (std::size_t j = n; j > 0; j = from[j])
      all.factorization.insert(all.factorization.begin(),
                               Word(tape.begin() + static_cast<std::ptrdiff_t>(from[j]),
                                    tape.begin() + static_cast<std::ptrdiff_t>(j)));
    out.cases.push_back(std::move(all));
  }
  return out;
}

bool is_prefix_code_pairwise(const std::vector<std::vector<std::string>>& words) {
  for (const auto& u : words) {
    for (const auto& v : words) {
      if (u.size() < v.size() && std::equal(u.begin(), u.end(), v.begin())) return false;
    }
  }
  return true;
}

bool restrictions_hold_brute_force(const AutomatonDescription& d) {
  for (const auto& q : d.states) {
    std::vector<std::vector<std::string>> tau;
    for (const auto& t : d.translucent) {
      if (t.state == q.name) tau.insert(tau.end(), t.words.begin(), t.words.end());
    }
    std::vector<std::string> readable;
    for (const auto& tr : d.delta) {
      if (tr.from == q.name) readable.push_back(tr.token);
    }
    for (const auto& u : tau) {
      if (u.empty()) return false;
      if (std::find(readable.begin(), readable.end(), u.front()) != readable.end()) return false;
    }
    if (!is_prefix_code_pairwise(tau)) return false;
  }
  return true;
}

namespace {

std::size_t uniform(std::mt19937& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(std::mt19937& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::vector<std::string> random_letters(std::mt19937& rng, std::size_t len) {
  std::vector<std::string> w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(coin(rng, 0.5) ? "a" : "b");
  return w;
}

}  // namespace

Automaton random_automaton(std::mt19937& rng, const RandomOptions& opt) {
  const std::size_t n = uniform(rng, 1, opt.max_states);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
  auto any_state = [&] { return names[uniform(rng, 0, n - 1)]; };

  AutomatonBuilder b({"a", "b"});
  for (const auto& q : names) b.state(q);
  b.initial(names[0]);
  if (!opt.deterministic && n > 1 && coin(rng, 0.3)) b.initial(any_state());

  for (const auto& q : names) {
    std::vector<std::string> readable;
    for (const char* letter : {"a", "b"}) {
      if (!coin(rng, 0.45)) continue;
      readable.emplace_back(letter);
      b.delta(q, letter, any_state());
      if (!opt.deterministic && coin(rng, 0.3)) b.delta(q, letter, any_state());
    }
    std::vector<std::vector<std::string>> tau;
    const std::size_t want = uniform(rng, 0, opt.max_words);
    for (std::size_t tries = 0; tau.size() < want && tries < 20; ++tries) {
      auto w = random_letters(rng, uniform(rng, 1, opt.max_word_len));
      if (std::find(readable.begin(), readable.end(), w.front()) != readable.end()) continue;
      if (std::find(tau.begin(), tau.end(), w) != tau.end()) continue;
      auto candidate = tau;
      candidate.push_back(w);
      if (is_prefix_code_pairwise(candidate)) tau = std::move(candidate);
    }
    if (!tau.empty()) {
      std::vector<std::string> spelled;
      for (const auto& w : tau) {
        std::string s;
        for (const auto& t : w) s += t;
        spelled.push_back(s);
      }
      b.translucent(q, spelled);
    }
    const std::size_t kind = uniform(rng, 0, opt.allow_goto ? 2 : 1);
    if (kind == 0) {
      b.accept(q);
    } else if (kind == 1) {
      b.reject(q);
    } else {
      std::vector<std::string> targets{any_state()};
      if (!opt.deterministic && coin(rng, 0.3)) targets.push_back(any_state());
      b.go_to(q, targets);
    }
  }
  return b.build();
}

AutomatonDescription random_description(std::mt19937& rng) {
  AutomatonDescription d;
  d.alphabet = {{"a", 0}, {"b", 0}};
  const std::size_t n = uniform(rng, 1, 3);
  for (std::size_t i = 0; i < n; ++i) d.states.push_back({"s" + std::to_string(i), 0});
  auto any_state = [&] { return d.states[uniform(rng, 0, n - 1)].name; };
  d.initials.push_back({d.states[0].name, 0});
  for (const auto& q : d.states) {
    for (const char* letter : {"a", "b"}) {
      if (coin(rng, 0.4)) d.delta.push_back({q.name, letter, any_state(), 0});
    }
    AutomatonDescription::Translucent t{q.name, {}, 0};
    const std::size_t count = uniform(rng, 0, 3);
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t len = coin(rng, 0.05) ? 0 : uniform(rng, 1, 3);
      t.words.push_back(random_letters(rng, len));
    }
    if (!t.words.empty()) d.translucent.push_back(std::move(t));
    d.sentinels.push_back({q.name, coin(rng, 0.5) ? SentinelKind::Accept : SentinelKind::Reject, {}, 0});
  }
  return d;
}

PcpInstance random_instance(std::mt19937& rng, std::size_t max_pairs, std::size_t max_len) {
  PcpInstance inst;
  const std::size_t m = uniform(rng, 1, max_pairs);
  auto letters = [&] {
    std::string s;
    for (std::size_t i = uniform(rng, 1, max_len); i > 0; --i) s += coin(rng, 0.5) ? 'a' : 'b';
    return s;
  };
  for (std::size_t i = 0; i < m; ++i) {
    std::string f = letters();
    std::string g = letters();
    inst.pairs.emplace_back(std::move(f), std::move(g));
  }
  return inst;
}

std::optional<std::vector<std::size_t>> brute_force_pcp(const PcpInstance& inst, std::size_t max_len) {
  const std::size_t m = inst.size();
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::size_t> seq(len, 1);
    while (true) {
      std::string f, g;
      for (std::size_t i : seq) {
        f += inst.pairs[i - 1].first;
        g += inst.pairs[i - 1].second;
      }
      if (f == g) return seq;
      std::size_t k = len;
      while (k > 0 && seq[k - 1] == m) seq[--k] = 1;
      if (k == 0) break;
      ++seq[k - 1];
    }
  }
  return std::nullopt;
}

void follow(const Automaton& a, Configuration start, std::size_t max_steps,
            const std::function<bool(const Configuration&)>& visit) {
  Configuration c = std::move(start);
  for (std::size_t i = 0; i <= max_steps; ++i) {
    if (!visit(c)) return;
    StepOutcome out = step(a, c);
    auto* next = std::get_if<Successors>(&out);
    if (next == nullptr || next->configurations.empty()) return;
    c = next->configurations.front();
  }
}

}  // namespace twa::testing
