// Single-step semantics and run loops.

#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "twa/automaton.hh"

namespace twa {

/// q·w·◁
struct Configuration {
  StateId state = 0;
  Word tape;

  bool operator==(const Configuration&) const = default;
};

struct ConfigurationHash {
  std::size_t operator()(const Configuration& c) const noexcept;
};

// ---------------------------------------------------------------------------
// Scanning
// ---------------------------------------------------------------------------

/// tape = prefix · letter · suffix with prefix ∈ τ(q)* and letter ∈ Σ_q.
struct ReadAt {
  std::size_t skip_len = 0;
  Symbol letter = 0;
  Word prefix;
  Word suffix;

  bool operator==(const ReadAt&) const = default;
};

/// tape ∈ τ(q)*; the head reaches the sentinel.
struct AllTranslucent {
  std::vector<Word> factorization;

  bool operator==(const AllTranslucent&) const = default;
};

/// tape = u·a·v with u ∈ τ(q)*, a ∉ Σ_q and a·v ∉ τ(q)·Σ*. `position` is |u|.
/// `truncated` marks a τ-word match cut off by the end of the tape; otherwise
/// the verdict only depends on the first `scanned` tokens.
struct Dead {
  std::size_t position = 0;
  bool truncated = false;
  std::size_t scanned = 0;

  bool operator==(const Dead&) const = default;
};

using ScanResult = std::variant<ReadAt, AllTranslucent, Dead>;

/// Left-to-right factorization of `tape` in state `q`. Single pass; the
/// prefix-code property leaves at most one live τ-word candidate at a time.
ScanResult scan(const Automaton& automaton, StateId q, std::span<const Symbol> tape);

// ---------------------------------------------------------------------------
// Steps and traces
// ---------------------------------------------------------------------------

enum class RejectReason { Dead, SentinelReject, Exhausted };

std::string_view to_string(RejectReason reason);

struct Successors {
  std::vector<Configuration> configurations;
  /// True for a sentinel Goto (tape unchanged), false for a letter read.
  bool via_sentinel = false;
};
struct AcceptStep {};
struct RejectStep {
  RejectReason reason = RejectReason::Dead;
  /// Dead position; meaningless for SentinelReject.
  std::size_t position = 0;
};

using StepOutcome = std::variant<Successors, AcceptStep, RejectStep>;

StepOutcome step(const Automaton& automaton, const Configuration& c);

enum class ActionKind { Read, Sentinel, Accept, Reject };

struct Action {
  ActionKind kind = ActionKind::Read;
  Symbol letter = 0;         // Read
  std::size_t position = 0;  // Read, Reject(Dead)
  RejectReason reason = RejectReason::Dead;

  bool operator==(const Action&) const = default;
};

/// One step of a computation: `from` ⊢ `to`. `to` is empty for the final
/// Accept / Reject step.
struct TraceEntry {
  Configuration from;
  Action action;
  std::optional<Configuration> to;

  bool operator==(const TraceEntry&) const = default;
};

using Trace = std::vector<TraceEntry>;

// ---------------------------------------------------------------------------
// Runs
// ---------------------------------------------------------------------------

enum class Verdict { Accepted, Rejected, Diverged };

struct RunResult {
  Verdict verdict = Verdict::Rejected;
  /// Set when verdict is Rejected.
  RejectReason reason = RejectReason::Dead;
  Trace trace;
  /// Set when verdict is Diverged: the sentinel states of the loop, starting
  /// with the state that repeated.
  std::vector<StateId> cycle;
  std::size_t steps = 0;
  std::size_t sentinel_steps = 0;

  bool accepted() const { return verdict == Verdict::Accepted; }
};

class NotDeterministic : public Error {
 public:
  using Error::Error;
};

/// Follows the unique computation from the initial state. A state seen twice
/// at the sentinel without a letter read in between yields Diverged; this
/// bounds a run on input length n to (n+1)·(|Q|+1) steps.
RunResult run_deterministic(const Automaton& automaton, std::span<const Symbol> input);

struct SearchResult {
  bool accepted = false;
  /// Shortest accepting computation, when there is one.
  std::optional<Trace> witness;
  /// Distinct (state, tape) configurations visited.
  std::size_t configurations = 0;
  /// Largest successor count of any visited configuration.
  std::size_t max_branching = 0;
};

/// Breadth-first search over the configuration graph from all initial
/// configurations. Finite because tapes only shrink and (state, tape) pairs
/// are visited once.
SearchResult run_nondeterministic(const Automaton& automaton, std::span<const Symbol> input);

/// Membership test.
bool accepts(const Automaton& automaton, std::span<const Symbol> input);

// ---------------------------------------------------------------------------
// Append property
// ---------------------------------------------------------------------------

class NotALetterStep : public Error {
 public:
  using Error::Error;
};

/// For c = (q, u·a·v) with a letter step, checks that every successor
/// (p, u·v) of c has (p, u·v·w) among the successors of (q, u·a·v·w).
bool check_append_property(const Automaton& automaton, const Configuration& c,
                           std::span<const Symbol> w);

}  // namespace twa
