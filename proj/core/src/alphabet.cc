#include "twa/alphabet.hh"

#include <algorithm>
#include <cctype>

namespace twa {

bool is_valid_token_name(std::string_view name) {
  if (name.empty()) return false;
  if (name.find(kSentinelGlyph) != std::string_view::npos) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '#' || c == '.';
  });
}

std::vector<std::string> split_spelled_word(std::string_view text, bool contiguous) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  if (text.find('.') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const std::size_t dot = text.find('.', start);
      out.emplace_back(text.substr(start, dot - start));
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
  } else if (contiguous) {
    for (char c : text) out.emplace_back(1, c);
  } else {
    out.emplace_back(text);
  }
  return out;
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (!is_valid_token_name(n)) throw Error("invalid token name '" + n + "'");
    if (!index_.emplace(n, static_cast<Symbol>(i)).second)
      throw Error("duplicate token '" + n + "'");
    if (n.size() != 1) single_character_ = false;
  }
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Word Alphabet::encode(std::span<const std::string> names) const {
  Word w;
  w.reserve(names.size());
  for (const auto& n : names) {
    auto s = find(n);
    if (!s) throw InvalidLetter("token '" + n + "' is not in the alphabet");
    w.push_back(*s);
  }
  return w;
}

Word Alphabet::parse_word(std::string_view text, bool force_tokens) const {
  const auto names = split_spelled_word(text, single_character_ && !force_tokens);
  return encode(names);
}

std::string Alphabet::spell(std::span<const Symbol> word) const {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0 && !single_character_) out += '.';
    out += name(word[i]);
  }
  return out;
}

}  // namespace twa
