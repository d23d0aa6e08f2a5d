// Concrete automata over {a, b}.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "twa/automaton.hh"

namespace twa {

/// RDFAwtw for { (ab)^(2^n) | n ≥ 1 }, a language that is not semi-linear.
/// States q0..q7, qf.
Automaton build_a_ex();

/// RDFAwtw for { a^(2n+1) b^(2n+1) | n ≥ 0 }. States q0..q6.
Automaton build_a_2lin1();

/// RDFAwtw for { a^(2n) b^(2n) | n ≥ 1 }.
///
/// q0 checks that the tape lies in (aa|bb)*, q1 deletes the leading a and q2
/// deletes the first b; what is left is a^(2n-1) b^(2n-1), which q3..q9 (a
/// copy of the A_2lin1 loop) accept exactly when n ≥ 1.
Automaton build_a_2lin();

/// RNFAwtw for { a^n b^n | n ≥ 1 }: the disjoint union of A_2lin and A_2lin1.
Automaton build_l_lin_union();

/// NFAwtl (all translucent words are single letters, no sentinel gotos) for
/// { w | |w|_a = n and |w|_b ∈ {n, 2n} for some n ≥ 0 }. Union of a DFAwtl
/// for |w|_a = |w|_b and one for |w|_b = 2|w|_a.
Automaton build_l_vee_nfawtl();

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

/// Disjoint union: states of `left` are renamed "L.<id>", those of `right`
/// "R.<id>", declaration order kept. Both must share one alphabet.
Automaton build_union(const Automaton& left, const Automaton& right);

/// Names accepted by example_by_name, in a fixed order.
const std::vector<std::string>& example_names();

/// Throws Error for an unknown name.
Automaton example_by_name(std::string_view name);

}  // namespace twa
