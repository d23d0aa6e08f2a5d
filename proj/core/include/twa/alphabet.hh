// Token alphabets and words for automata with translucent words.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace twa {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A token name that is not part of the alphabet at hand, or a letter outside
/// the alphabet an operation is restricted to.
class InvalidLetter : public Error {
 public:
  using Error::Error;
};

/// Index of a token in its alphabet's declaration order.
using Symbol = std::uint32_t;

/// A word is a sequence of symbols of some alphabet; the empty vector is λ.
using Word = std::vector<Symbol>;

/// The end-of-tape marker as printed in traces. Never a token.
inline constexpr std::string_view kSentinelGlyph = "◁";

/// Non-empty, and free of whitespace, '#', '.' and the sentinel glyph.
bool is_valid_token_name(std::string_view name);

/// Splits a spelled word into token names. A '.' anywhere means '.'-joined
/// tokens; otherwise, when `contiguous` is set, every character is a token,
/// and when it is not the whole text is a single token. The text "" is λ.
std::vector<std::string> split_spelled_word(std::string_view text, bool contiguous);

/// An ordered set of named tokens.
class Alphabet {
 public:
  Alphabet() = default;

  /// Throws Error on an invalid or duplicated name.
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(Symbol s) const { return names_.at(s); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<Symbol> find(std::string_view name) const;

  /// True when every token is one character long, which enables the
  /// contiguous word spelling ("abab" instead of "a.b.a.b").
  bool single_character() const { return single_character_; }

  /// Throws InvalidLetter for names outside the alphabet.
  Word encode(std::span<const std::string> names) const;

  /// Parses a spelled word. `force_tokens` disables the contiguous form.
  Word parse_word(std::string_view text, bool force_tokens = false) const;

  /// Inverse of parse_word: contiguous for single-character alphabets,
  /// '.'-joined otherwise.
  std::string spell(std::span<const Symbol> word) const;

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Symbol> index_;
  bool single_character_ = true;
};

}  // namespace twa
