// Brute-force language enumeration, reference predicates and Parikh images.
//
// Everything here is deliberately independent of the automaton constructions:
// predicates are plain arithmetic on letter strings, so comparing them with
// an automaton is a genuine differential test.

#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "twa/automaton.hh"

namespace twa {

inline constexpr std::size_t kDefaultBudget = 2'000'000;

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Calls `visit` on every word of length ≤ max_len over an alphabet of
/// `alphabet_size` symbols, in length-then-lexicographic order.
void for_each_word(std::size_t alphabet_size, std::size_t max_len,
                   const std::function<void(const Word&)>& visit);

/// Accepted words of length ≤ max_len in length-then-lexicographic order.
/// Budget counts membership runs; subtrees of words whose first step already
/// rejects every extension are skipped without a run.
std::vector<Word> enumerate_accepted(const Automaton& automaton, std::size_t max_len,
                                     std::size_t budget = kDefaultBudget);

// Reference predicates on letter strings over {a, b}. InvalidLetter otherwise.

/// { a^(2n) b^(2n) | n ≥ 1 }
bool is_l2lin(std::string_view w);
/// { a^(2n+1) b^(2n+1) | n ≥ 0 }
bool is_l2lin1(std::string_view w);
/// { a^n b^n | n ≥ 1 }
bool is_llin(std::string_view w);
/// { (ab)^(2^n) | n ≥ 1 }
bool is_lex(std::string_view w);
/// |w|_a = n and |w|_b ∈ {n, 2n}
bool is_lvee(std::string_view w);
/// |w|_a = |w|_b
bool is_leq2(std::string_view w);

using LetterPredicate = bool (*)(std::string_view);

/// Names: l2lin, l2lin1, llin, lex, lvee, leq2. Throws Error otherwise.
LetterPredicate predicate_by_name(std::string_view name);
const std::vector<std::string>& predicate_names();

using WordPredicate = std::function<bool(const Word&)>;

/// Adapts a letter predicate to words of `alphabet`, which must consist of
/// single-character tokens.
WordPredicate over_alphabet(const Alphabet& alphabet, LetterPredicate predicate);

using ParikhVector = std::vector<std::size_t>;

/// Letter counts in alphabet order. Throws InvalidLetter for foreign symbols.
ParikhVector parikh(const Word& w, const Alphabet& alphabet);

std::set<ParikhVector> parikh_image(const std::vector<Word>& words, const Alphabet& alphabet);

/// Same set of Parikh vectors.
bool letter_equivalent(const std::vector<Word>& s, const std::vector<Word>& t,
                       const Alphabet& alphabet);

struct MismatchReport {
  std::vector<Word> false_accepts;
  std::vector<Word> false_rejects;
  std::size_t max_len = 0;
  std::size_t total_checked = 0;

  bool agrees() const { return false_accepts.empty() && false_rejects.empty(); }
};

/// Compares membership with `predicate` on every word of length ≤ max_len.
MismatchReport compare_language(const Automaton& automaton, const WordPredicate& predicate,
                                std::size_t max_len, std::size_t budget = kDefaultBudget);

}  // namespace twa
