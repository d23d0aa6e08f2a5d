#include "twa/oracle.hh"

#include <algorithm>
#include <variant>

#include "twa/engine.hh"

namespace twa {

void for_each_word(std::size_t alphabet_size, std::size_t max_len,
                   const std::function<void(const Word&)>& visit) {
  for (std::size_t len = 0; len <= max_len; ++len) {
    if (alphabet_size == 0 && len > 0) return;
    Word w(len, 0);
    while (true) {
      visit(w);
      std::size_t i = len;
      while (i > 0 && w[i - 1] + 1 == alphabet_size) w[--i] = 0;
      if (i == 0) break;
      ++w[i - 1];
    }
  }
}

std::vector<Word> enumerate_accepted(const Automaton& a, std::size_t max_len, std::size_t budget) {
  const std::size_t sigma = a.alphabet().size();
  std::size_t runs = 0;
  std::vector<Word> out;
  Word w;

  // Every initial state dies on a block that lies entirely inside `w`, so the
  // first step rejects `w` and all of its extensions.
  auto doomed = [&]() {
    for (StateId q : a.initial_states()) {
      ScanResult r = scan(a, q, w);
      const auto* dead = std::get_if<Dead>(&r);
      if (dead == nullptr || dead->truncated) return false;
    }
    return true;
  };

  std::function<void(std::size_t)> descend = [&](std::size_t len) {
    if (w.size() == len) {
      if (++runs > budget)
        throw BudgetExceeded("enumeration needs more than " + std::to_string(budget) +
                             " membership tests");
      if (accepts(a, w)) out.push_back(w);
      return;
    }
    for (Symbol s = 0; s < sigma; ++s) {
      w.push_back(s);
      if (!doomed()) descend(len);
      w.pop_back();
    }
  };
  for (std::size_t len = 0; len <= max_len; ++len) descend(len);
  return out;
}

namespace {

void require_ab(std::string_view w) {
  if (w.find_first_not_of("ab") != std::string_view::npos)
    throw InvalidLetter("predicate is defined on words over {a,b}");
}

std::size_t count(std::string_view w, char c) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), c));
}

// a^i b^j: returns (i, j) or nothing.
std::optional<std::pair<std::size_t, std::size_t>> a_star_b_star(std::string_view w) {
  const std::size_t i = w.find_first_not_of('a');
  if (i == std::string_view::npos) return std::pair{w.size(), std::size_t{0}};
  if (w.find_first_not_of('b', i) != std::string_view::npos) return std::nullopt;
  return std::pair{i, w.size() - i};
}

}  // namespace

bool is_l2lin(std::string_view w) {
  require_ab(w);
  auto ab = a_star_b_star(w);
  return ab && ab->first == ab->second && ab->first >= 2 && ab->first % 2 == 0;
}

bool is_l2lin1(std::string_view w) {
  require_ab(w);
  auto ab = a_star_b_star(w);
  return ab && ab->first == ab->second && ab->first % 2 == 1;
}

bool is_llin(std::string_view w) {
  require_ab(w);
  auto ab = a_star_b_star(w);
  return ab && ab->first == ab->second && ab->first >= 1;
}

bool is_lex(std::string_view w) {
  require_ab(w);
  if (w.size() % 2 != 0) return false;
  const std::size_t m = w.size() / 2;
  if (m < 2 || (m & (m - 1)) != 0) return false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != (i % 2 == 0 ? 'a' : 'b')) return false;
  }
  return true;
}

bool is_lvee(std::string_view w) {
  require_ab(w);
  const std::size_t n = count(w, 'a');
  const std::size_t b = count(w, 'b');
  return b == n || b == 2 * n;
}

bool is_leq2(std::string_view w) {
  require_ab(w);
  return count(w, 'a') == count(w, 'b');
}

const std::vector<std::string>& predicate_names() {
  static const std::vector<std::string> names = {"l2lin", "l2lin1", "llin", "lex", "lvee", "leq2"};
  return names;
}

LetterPredicate predicate_by_name(std::string_view name) {
  if (name == "l2lin") return is_l2lin;
  if (name == "l2lin1") return is_l2lin1;
  if (name == "llin") return is_llin;
  if (name == "lex") return is_lex;
  if (name == "lvee") return is_lvee;
  if (name == "leq2") return is_leq2;
  throw Error("unknown predicate '" + std::string(name) + "'");
}

WordPredicate over_alphabet(const Alphabet& alphabet, LetterPredicate predicate) {
  if (!alphabet.single_character())
    throw Error("letter predicates need an alphabet of single-character tokens");
  return [alphabet, predicate](const Word& w) { return predicate(alphabet.spell(w)); };
}

ParikhVector parikh(const Word& w, const Alphabet& alphabet) {
  ParikhVector counts(alphabet.size(), 0);
  for (Symbol s : w) {
    if (s >= alphabet.size()) throw InvalidLetter("symbol outside the alphabet");
    ++counts[s];
  }
  return counts;
}

std::set<ParikhVector> parikh_image(const std::vector<Word>& words, const Alphabet& alphabet) {
  std::set<ParikhVector> image;
  for (const auto& w : words) image.insert(parikh(w, alphabet));
  return image;
}

bool letter_equivalent(const std::vector<Word>& s, const std::vector<Word>& t,
                       const Alphabet& alphabet) {
  return parikh_image(s, alphabet) == parikh_image(t, alphabet);
}

MismatchReport compare_language(const Automaton& a, const WordPredicate& predicate,
                                std::size_t max_len, std::size_t budget) {
  const std::size_t sigma = a.alphabet().size();
  std::size_t total = 0;
  for (std::size_t len = 0, layer = 1; len <= max_len; ++len, layer *= sigma) {
    total += layer;
    if (total > budget)
      throw BudgetExceeded("comparison needs more than " + std::to_string(budget) +
                           " membership tests");
  }

  MismatchReport report;
  report.max_len = max_len;
  for_each_word(sigma, max_len, [&](const Word& w) {
    ++report.total_checked;
    const bool in_automaton = accepts(a, w);
    const bool in_language = predicate(w);
    if (in_automaton && !in_language) report.false_accepts.push_back(w);
    if (!in_automaton && in_language) report.false_rejects.push_back(w);
  });
  return report;
}

}  // namespace twa
