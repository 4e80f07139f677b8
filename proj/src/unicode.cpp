#include "sylaba/unicode.hpp"

#include <stdexcept>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

namespace sylaba::unicode {

std::u32string decode(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  const auto* s = reinterpret_cast<const uint8_t*>(utf8.data());
  const auto length = static_cast<int32_t>(utf8.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(s, i, length, c);
    out.push_back(c < 0 ? U'\uFFFD' : static_cast<char32_t>(c));
  }
  return out;
}

std::string encode(char32_t cp) {
  uint8_t buf[4];
  int32_t n = 0;
  UBool error = false;
  U8_APPEND(buf, n, 4, static_cast<UChar32>(cp), error);
  if (error) {
    return "\xEF\xBF\xBD";
  }
  return std::string(reinterpret_cast<const char*>(buf), static_cast<size_t>(n));
}

std::string encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) {
    out += encode(cp);
  }
  return out;
}

bool is_letter(char32_t cp) { return u_isUAlphabetic(static_cast<UChar32>(cp)) && !u_isdigit(static_cast<UChar32>(cp)); }

bool is_digit(char32_t cp) { return u_isdigit(static_cast<UChar32>(cp)); }

bool is_line_break(char32_t cp) {
  return cp == U'\n' || cp == U'\r' || cp == U'\u0085' || cp == U'\u2028' || cp == U'\u2029';
}

bool is_horizontal_space(char32_t cp) {
  return !is_line_break(cp) && u_isUWhiteSpace(static_cast<UChar32>(cp));
}

LetterCase letter_case(char32_t cp) {
  const auto c = static_cast<UChar32>(cp);
  const UChar32 lower = u_tolower(c);
  const UChar32 upper = u_toupper(c);
  if (lower != c && u_toupper(lower) == c && u_tolower(lower) == lower) {
    return LetterCase::Upper;
  }
  if (upper != c && lower == c && u_tolower(upper) == c && u_toupper(upper) == upper) {
    return LetterCase::Lower;
  }
  return LetterCase::Neutral;
}

char32_t to_lower(char32_t cp) {
  return letter_case(cp) == LetterCase::Upper ? static_cast<char32_t>(u_tolower(static_cast<UChar32>(cp))) : cp;
}

char32_t to_upper(char32_t cp) {
  return letter_case(cp) == LetterCase::Lower ? static_cast<char32_t>(u_toupper(static_cast<UChar32>(cp))) : cp;
}

std::u32string to_lower(std::u32string_view text) {
  std::u32string out(text);
  for (auto& cp : out) cp = to_lower(cp);
  return out;
}

std::u32string to_upper(std::u32string_view text) {
  std::u32string out(text);
  for (auto& cp : out) cp = to_upper(cp);
  return out;
}

std::string nfc(std::string_view utf8) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* normalizer = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) {
    throw std::runtime_error("ICU NFC normalizer unavailable");
  }
  const auto source = icu::UnicodeString::fromUTF8(icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  icu::UnicodeString normalized = normalizer->normalize(source, status);
  if (U_FAILURE(status)) {
    throw std::runtime_error("NFC normalization failed");
  }
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

}  // namespace sylaba::unicode
