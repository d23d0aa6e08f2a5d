// The line-oriented automaton file format and trace rendering.
//
//   alphabet a b                  # one or more lines, union taken
//   state q0                      # one per line, declaration order kept
//   initial q0
//   translucent q0 ab ba          # words; '.'-joined for multi-char tokens
//   delta q0 a q1                 # repeatable for nondeterminism
//   sentinel q0 accept | reject | goto q1 [q2 ...]
//
// `alphabet` and `state` declarations must precede their uses. A state
// without a sentinel line rejects at the sentinel.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "twa/automaton.hh"
#include "twa/engine.hh"

namespace twa {

struct Diagnostic {
  int line = 0;
  std::string kind;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

class ParseError : public Error {
 public:
  explicit ParseError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

/// Parses and validates. Throws ParseError with every syntax and validation
/// problem, each tagged with a line number, sorted by line.
Automaton parse_automaton(std::string_view text);

/// Canonical text: alphabet, states, initials, translucent sets, transitions,
/// non-reject sentinel actions, in declaration order.
std::string serialize(const Automaton& automaton);

/// "q1 abab ◁", or "qf ◁" for the empty tape.
std::string format_configuration(const Automaton& automaton, const Configuration& c);

/// "q1 abab ◁  --read a@0-->  q2 bab ◁"
std::string format_step(const Automaton& automaton, const TraceEntry& entry);

/// ACCEPT, REJECT(<reason>) or DIVERGED.
std::string format_verdict(const RunResult& result);

/// One line per step, then DIVERGED for diverged runs. A run without trace
/// prints its verdict alone.
std::string format_run(const Automaton& automaton, const RunResult& result);

}  // namespace twa
