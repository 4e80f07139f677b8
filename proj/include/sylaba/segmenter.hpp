#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

// Rule-based Polish sub-word segmentation.
//
// Text is turned into a stream of tokens: syllable-like word pieces chained
// by connector flags, single-character punctuation, and four marker tokens
// (`_up_`, `_cap_`, `_eol_`, `_unk_`). tokenize() and detokenize() are exact
// inverses on normalized text.
namespace sylaba {

namespace specials {
inline constexpr std::string_view kUp = "_up_";
inline constexpr std::string_view kCap = "_cap_";
inline constexpr std::string_view kEol = "_eol_";
inline constexpr std::string_view kUnk = "_unk_";
// Serialized form of an explicit space token.
inline constexpr std::string_view kSpace = "_sp_";
}  // namespace specials

// Rendered in place of `_unk_`.
inline constexpr std::string_view kUnknownGlyph = "\xEF\xBF\xBD";

enum class TokenKind : std::uint8_t { Special, Piece, Punct, Space };

struct Token {
  TokenKind kind = TokenKind::Piece;
  std::string surface;
  // Piece: connector markers (`--x`, `x++`). Punct: literal glue to the
  // neighbouring token, overriding the spacing table.
  bool joins_prev = false;
  bool joins_next = false;

  static Token special(std::string_view name);
  static Token piece(std::string surface, bool joins_prev = false, bool joins_next = false);
  static Token punct(std::string surface, bool joins_prev = false, bool joins_next = false);
  static Token space();

  bool is(std::string_view special_name) const {
    return kind == TokenKind::Special && surface == special_name;
  }

  std::string serialize() const;
  // Strings that are not a valid serialized token parse as `_unk_`.
  static Token parse(std::string_view text);

  friend bool operator==(const Token&, const Token&) = default;
};

enum class SegmentMode : std::uint8_t { SubWord = 0, Char = 1 };

std::string_view to_string(SegmentMode mode);
// Accepts "subword" and "char"; throws std::invalid_argument otherwise.
SegmentMode parse_segment_mode(std::string_view name);

struct SegmenterConfig {
  // Tried in order; the first prefix that leaves a long enough core wins.
  std::vector<std::string> prefix_list;
  // Consonant clusters (UTF-8, digraphs spelled out) allowed to open a
  // syllable. Any single consonant unit is always accepted.
  std::set<std::string> legal_onsets;
  int min_core_vowels = 2;
  SegmentMode mode = SegmentMode::SubWord;

  static SegmenterConfig defaults(SegmentMode mode = SegmentMode::SubWord);
  // Throws std::invalid_argument.
  void validate() const;

  friend bool operator==(const SegmenterConfig&, const SegmenterConfig&) = default;
};

// NFC, `\n` line endings, single spaces, no leading/trailing spaces per line.
std::string normalize(std::string_view text);

// a ą e ę i o ó u y, plus the archaic é.
bool is_vowel(char32_t cp);

// Number of vowel nuclei; an `i` directly before another vowel only
// palatalizes it and is not counted.
int count_nuclei(std::string_view word);

// Splits a lowercase word into syllable-like pieces. Throws
// std::invalid_argument on empty input or non-letters.
std::vector<std::string> syllabify(std::string_view word, const SegmenterConfig& cfg);
std::vector<std::string> syllabify(std::string_view word);

struct PrefixSplit {
  std::vector<std::string> prefixes;
  std::string core;

  friend bool operator==(const PrefixSplit&, const PrefixSplit&) = default;
};

PrefixSplit stem_prefixes(std::string_view word, const SegmenterConfig& cfg);

std::vector<Token> tokenize(std::string_view text, const SegmenterConfig& cfg);

// Total on any token sequence. Char-mode streams carry their spaces as
// explicit tokens; sub-word streams rely on connectors and the punctuation
// spacing table.
std::string detokenize(std::span<const Token> tokens, SegmentMode mode = SegmentMode::SubWord);

// Vowel nuclei across the words of one line; punctuation counts 0.
int count_line_syllables(std::string_view line);

// Token-stream interchange format: serialized tokens joined by single spaces.
std::string serialize_tokens(std::span<const Token> tokens);
std::vector<Token> parse_tokens(std::string_view stream);

// Punctuation spacing table used by detokenize.
bool attaches_to_previous(std::string_view punct);
bool attaches_to_next(std::string_view punct);

}  // namespace sylaba
