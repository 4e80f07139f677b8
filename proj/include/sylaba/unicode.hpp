#pragma once

#include <string>
#include <string_view>

// Thin code-point helpers over ICU. All text in the library is UTF-8;
// segmentation works on decoded code points.
namespace sylaba::unicode {

// Invalid UTF-8 sequences decode to U+FFFD.
std::u32string decode(std::string_view utf8);
std::string encode(std::u32string_view text);
std::string encode(char32_t cp);

bool is_letter(char32_t cp);
bool is_digit(char32_t cp);
// Any Unicode whitespace except the line separators handled by normalize().
bool is_horizontal_space(char32_t cp);
bool is_line_break(char32_t cp);

enum class LetterCase { Lower, Upper, Neutral };

// Upper means lower-casing is reversible through to_upper; Lower means the
// reverse. Everything else (caseless letters, titlecase digraphs, irregular
// mappings such as U+0130) is Neutral and is never changed by to_lower or
// to_upper, which keeps case restoration exact.
LetterCase letter_case(char32_t cp);
char32_t to_lower(char32_t cp);
char32_t to_upper(char32_t cp);
std::u32string to_lower(std::u32string_view text);
std::u32string to_upper(std::u32string_view text);

// Canonical composition (NFC).
std::string nfc(std::string_view utf8);

}  // namespace sylaba::unicode
