// Oracles and generators shared by the unit and acceptance suites. Nothing in
// here calls the scanner, so it can check it.

#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "twa/twa.hh"

namespace twa::testing {

/// Spells `text` over the automaton's alphabet ("" is λ).
Word word(const Automaton& a, std::string_view text);

/// Repeats `unit` `n` times.
std::string power(std::string_view unit, std::size_t n);

/// Factorization by exhaustive split search: enumerate every u·a·v split of
/// `tape`, decide u ∈ τ* by dynamic programming over all of τ (not a trie),
/// and collect every case of the single-step definition that applies.
struct SplitOracle {
  std::vector<ScanResult> cases;
};
SplitOracle split_oracle(std::span<const Word> tau, const std::vector<bool>& readable,
                         std::span<const Symbol> tape);

/// Pairwise O(n²) prefix test: true iff no word is a proper prefix of another
/// (duplicates ignored).
bool is_prefix_code_pairwise(const std::vector<std::vector<std::string>>& words);

/// Both translucency restrictions checked word by word against the raw
/// description.
bool restrictions_hold_brute_force(const AutomatonDescription& d);

struct RandomOptions {
  std::size_t max_states = 4;
  std::size_t max_words = 3;
  std::size_t max_word_len = 3;
  bool deterministic = false;
  bool allow_goto = true;
};

/// A valid random automaton over {a, b}.
Automaton random_automaton(std::mt19937& rng, const RandomOptions& options = {});

/// A random description over {a, b} whose names are all declared but whose
/// translucent sets may break either restriction or contain λ.
AutomatonDescription random_description(std::mt19937& rng);

/// A random PCP instance with m ≤ max_pairs and word lengths ≤ max_len.
PcpInstance random_instance(std::mt19937& rng, std::size_t max_pairs, std::size_t max_len);

/// Shortest solutions first; index sequences up to `max_len` (1-based).
std::optional<std::vector<std::size_t>> brute_force_pcp(const PcpInstance& inst, std::size_t max_len);

/// Follows the deterministic computation from `start`, calling `visit` on
/// every configuration reached (including `start`), for at most `max_steps`.
void follow(const Automaton& a, Configuration start, std::size_t max_steps,
            const std::function<bool(const Configuration&)>& visit);

}  // namespace twa::testing
