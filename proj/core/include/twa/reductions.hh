// Post Correspondence Problem instances compiled into repetitive DFAwtws.
//
// For morphisms f, g : {x1..xm}* → {a,b}* the compiled automaton reads the
// x's left to right; for each x_i it deletes u_i = f(x_i) from the unprimed
// letters and v_i = g(x_i) from the primed copies a', b'. The initial state
// only lets through tapes in (Σ ∪ {aa', bb'})*, which pairs every unprimed
// letter with its primed twin, so acceptance forces f(w) = g(w).

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twa/automaton.hh"

namespace twa {

class InvalidInstance : public Error {
 public:
  using Error::Error;
};

/// Pairs (f(x_i), g(x_i)), each a non-empty string over 'a' and 'b'.
struct PcpInstance {
  std::vector<std::pair<std::string, std::string>> pairs;

  /// Throws InvalidInstance on an empty instance or an empty / non-{a,b} word.
  void check() const;

  std::size_t size() const { return pairs.size(); }

  /// f and g applied to x_{i1}···x_{ir} (1-based indices).
  std::string image_f(std::span<const std::size_t> solution) const;
  std::string image_g(std::span<const std::size_t> solution) const;
};

/// Reads the pairs-file format: one `pair <f-word> <g-word>` per line, '#'
/// comments and blank lines ignored. Throws InvalidInstance with the line.
PcpInstance parse_pairs(std::string_view text);

/// Token layout shared by both compilers: x1..xm, a, b, a', b', and for the
/// bounded variant c, d. Symbol ids of the common part coincide, so a word
/// for the plain automaton is also a word of the bounded one.
struct ReductionAlphabet {
  Alphabet alphabet;
  std::vector<Symbol> sigma;  // x1..xm
  Symbol a = 0, b = 0, a_prime = 0, b_prime = 0;
  std::vector<Symbol> gamma;  // c, d when bounded

  ReductionAlphabet(std::size_t m, bool bounded);
};

/// A_(f,g): states q0, q1, q2, p.i.y for proper prefixes y of u_i and q.i.y
/// for proper prefixes y of v_i (y = λ spelled "-").
/// |Q| = 3 + Σ_i (|u_i| + |v_i|).
Automaton compile_pcp(const PcpInstance& instance);

/// A'_(f,g): A_(f,g) plus q3 and the alphabet {c, d}; q0 also skips c and d,
/// q2 moves to q3 on c, d or the sentinel, q3 reads c, d and accepts at the
/// sentinel.
Automaton compile_pcp_bounded(const PcpInstance& instance);

/// The morphism a ↦ a a', b ↦ b b' as token names. Throws InvalidLetter.
std::vector<std::string> psi2(std::string_view letters);

class EmptySolution : public Error {
 public:
  using Error::Error;
};
class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

struct Witness {
  /// x_{i1}···x_{ir} · ψ2(f(x_{i1}···x_{ir})), encoded in ReductionAlphabet.
  Word word;
  std::string f_image;
  std::string g_image;
  bool is_solution = false;
};

/// `solution` holds 1-based pair indices.
Witness canonical_witness(const PcpInstance& instance, std::span<const std::size_t> solution);

}  // namespace twa
