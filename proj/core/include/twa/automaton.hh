// Finite automata with translucent words (NFAwtw) and their repetitive
// variant: construction, validation and classification.
//
// An automaton is the tuple (Q, Σ, ◁, τ, I, δ). In state q the head skips a
// prefix of the tape that factors into words of τ(q) and then either reads
// (and deletes) a letter of Σ_q = { a : δ(q,a) ≠ ∅ }, gets stuck, or reaches
// the sentinel ◁, where the sentinel action of q decides. A repetitive
// automaton may map ◁ to a set of states, which sends the head back to the
// left end of the unchanged tape.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "twa/alphabet.hh"

namespace twa {

using StateId = std::uint32_t;

enum class SentinelKind { Accept, Reject, Goto };

/// δ(q, ◁). `targets` is non-empty exactly for Goto.
struct SentinelAction {
  SentinelKind kind = SentinelKind::Reject;
  std::vector<StateId> targets;

  static SentinelAction accept() { return {SentinelKind::Accept, {}}; }
  static SentinelAction reject() { return {SentinelKind::Reject, {}}; }
  static SentinelAction go_to(std::vector<StateId> targets) {
    return {SentinelKind::Goto, std::move(targets)};
  }

  bool operator==(const SentinelAction&) const = default;
};

// ---------------------------------------------------------------------------
// Raw descriptions
// ---------------------------------------------------------------------------

/// An unvalidated automaton in terms of names. Every entry remembers the
/// source line it came from (0 when built in code) so that violations can be
/// reported against a file.
struct AutomatonDescription {
  struct Name {
    std::string name;
    int line = 0;
  };
  struct Translucent {
    std::string state;
    std::vector<std::vector<std::string>> words;
    int line = 0;
  };
  struct Transition {
    std::string from;
    std::string token;
    std::string to;
    int line = 0;
  };
  struct Sentinel {
    std::string state;
    SentinelKind kind = SentinelKind::Reject;
    std::vector<std::string> targets;
    int line = 0;
  };

  std::vector<Name> alphabet;
  std::vector<Name> states;
  std::vector<Name> initials;
  std::vector<Translucent> translucent;
  std::vector<Transition> delta;
  std::vector<Sentinel> sentinels;

  /// Adds `sentinel <q> reject` for every declared state that has none.
  void default_missing_sentinels();
};

enum class ViolationKind {
  EmptyTranslucentWord,
  PrefixCodeViolation,
  ReadableLetterPrefix,
  UndeclaredState,
  UndeclaredToken,
  MissingSentinel,
  EmptyInitialSet,
  DuplicateDeclaration,
  ConflictingSentinel,
  EmptyGotoSet,
  InvalidTokenName,
};

std::string_view to_string(ViolationKind kind);

/// One broken restriction. For PrefixCodeViolation `subject` is the shorter
/// word and `other` the longer; for ReadableLetterPrefix `subject` is the
/// translucent word and `other` the readable letter. Words are '.'-joined.
struct Violation {
  ViolationKind kind;
  std::string state;
  std::string subject;
  std::string other;
  int line = 0;

  std::string message() const;
  bool operator==(const Violation&) const = default;
};

/// Empty iff `description` denotes a valid automaton.
std::vector<Violation> validate(const AutomatonDescription& description);

/// Every pair (u, v) of distinct words of `words` where u is a proper prefix
/// of v, in the order the longer words appear.
std::vector<std::pair<std::size_t, std::size_t>> prefix_pairs(
    std::span<const std::vector<std::string>> words);

class InvalidAutomaton : public Error {
 public:
  explicit InvalidAutomaton(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// ---------------------------------------------------------------------------
// Validated automata
// ---------------------------------------------------------------------------

/// τ(q) compiled into a trie over symbols. Because τ(q) is a prefix code,
/// terminal nodes are leaves.
class PrefixTrie {
 public:
  static constexpr std::int32_t kNone = -1;
  static constexpr std::int32_t kRoot = 0;

  PrefixTrie() = default;
  PrefixTrie(std::size_t alphabet_size, std::span<const Word> words);

  std::int32_t next(std::int32_t node, Symbol s) const {
    return edges_[static_cast<std::size_t>(node) * width_ + s];
  }
  bool terminal(std::int32_t node) const { return terminal_[static_cast<std::size_t>(node)]; }
  bool empty() const { return terminal_.size() <= 1; }

 private:
  std::size_t width_ = 0;
  std::vector<std::int32_t> edges_;
  std::vector<bool> terminal_;
};

/// A validated NFAwtw or RNFAwtw. Immutable after construction.
class Automaton {
 public:
  /// Throws InvalidAutomaton listing every violation.
  static Automaton from_description(const AutomatonDescription& description);

  const Alphabet& alphabet() const { return alphabet_; }

  std::size_t num_states() const { return state_names_.size(); }
  const std::string& state_name(StateId q) const { return state_names_.at(q); }
  std::optional<StateId> find_state(std::string_view name) const;

  std::span<const StateId> initial_states() const { return initials_; }

  /// τ(q) in declaration order.
  std::span<const Word> translucent(StateId q) const { return translucent_[q]; }
  const PrefixTrie& translucent_trie(StateId q) const { return tries_[q]; }

  /// δ(q, a) in declaration order.
  std::span<const StateId> successors(StateId q, Symbol a) const {
    return delta_[q * alphabet_.size() + a];
  }
  /// a ∈ Σ_q.
  bool can_read(StateId q, Symbol a) const { return !successors(q, a).empty(); }

  const SentinelAction& sentinel(StateId q) const { return sentinel_[q]; }

  /// Description with every directive explicit, in canonical order.
  AutomatonDescription to_description() const;

 private:
  Automaton() = default;

  Alphabet alphabet_;
  std::vector<std::string> state_names_;
  std::unordered_map<std::string, StateId> state_index_;
  std::vector<StateId> initials_;
  std::vector<std::vector<Word>> translucent_;
  std::vector<PrefixTrie> tries_;
  std::vector<std::vector<StateId>> delta_;
  std::vector<SentinelAction> sentinel_;
};

/// Restriction class of an automaton. `k` and `ell` are 0 when no state has
/// translucent words.
struct ClassReport {
  bool deterministic = false;
  bool repetitive = false;
  std::size_t k = 0;
  std::size_t ell = 0;

  bool operator==(const ClassReport&) const = default;
};

ClassReport classify(const Automaton& automaton);

// ---------------------------------------------------------------------------
// Builder
// ---------------------------------------------------------------------------

/// Fluent construction of descriptions in code. Translucent words are spelled
/// as in the file format ("aa", or "a.a'" for multi-character tokens).
/// States without a sentinel directive default to reject on build().
class AutomatonBuilder {
 public:
  explicit AutomatonBuilder(std::vector<std::string> alphabet);

  AutomatonBuilder& state(std::string id);
  AutomatonBuilder& states(std::initializer_list<std::string> ids);
  AutomatonBuilder& initial(std::string id);
  AutomatonBuilder& translucent(std::string id, std::vector<std::string> spelled_words);
  AutomatonBuilder& delta(std::string from, std::string token, std::string to);
  AutomatonBuilder& accept(std::string id);
  AutomatonBuilder& reject(std::string id);
  AutomatonBuilder& go_to(std::string id, std::vector<std::string> targets);

  const AutomatonDescription& description() const { return description_; }
  Automaton build() const;

 private:
  AutomatonDescription description_;
  bool contiguous_ = true;
};

}  // namespace twa
