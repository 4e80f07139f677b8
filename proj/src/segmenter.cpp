#include "sylaba/segmenter.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "sylaba/unicode.hpp"

namespace sylaba {

namespace {

using unicode::LetterCase;

constexpr std::array<std::string_view, 7> kDigraphs = {"ch", "cz", "dz", "dź", "dż", "rz", "sz"};

// Consonant units that may open a syllable, besides any single unit.
constexpr std::string_view kDefaultOnsets[] = {
    // single consonants and digraphs
    "b", "c", "ć", "d", "f", "g", "h", "j", "k", "l", "ł", "m", "n", "ń", "p", "r", "s", "ś", "t", "w",
    "z", "ź", "ż", "q", "v", "x", "ch", "cz", "dz", "dź", "dż", "rz", "sz",
    // clusters
    "bl", "bł", "br", "brz", "bz", "bż", "bzd", "chl", "chł", "chm", "chr", "chrz", "chw", "cl", "cm", "cn",
    "cw", "czt", "czw", "ćm", "ćw", "dl", "dł", "dm", "dn", "dr", "drw", "drz", "dw", "dzb", "dzw", "dźw",
    "fl", "fr", "gd", "gdz", "gl", "gł", "gm", "gn", "gr", "grz", "gw", "gż", "kl", "kł", "km", "kn", "kp",
    "kr", "krz", "ks", "ksz", "kś", "kt", "kw", "lś", "lśn", "lw", "łb", "łk", "łz", "łż", "mch", "md", "mdł",
    "mg", "mgł", "ml", "mł", "mn", "mr", "mrz", "msz", "mś", "pch", "pchn", "pl", "pł", "pn", "pr", "prz",
    "ps", "pst", "pstr", "psz", "pś", "pt", "pw", "rd", "rdz", "rt", "rw", "rż", "sch", "sk", "skl", "skł",
    "skr", "skw", "sl", "sł", "sm", "sn", "sp", "spl", "spr", "st", "str", "strz", "sw", "szcz", "szk",
    "szl", "szł", "szm", "szn", "szp", "szr", "szt", "sztr", "szw", "śc", "śl", "śm", "śn", "śp", "śr", "św",
    "tk", "tl", "tł", "tn", "tr", "trz", "tw", "wb", "wch", "wd", "wdz", "wg", "wk", "wl", "wł", "wm", "wn",
    "wp", "wr", "wrz", "ws", "wsk", "wsp", "wst", "wsz", "wś", "wt", "wz", "wzb", "wzg", "wż", "zb", "zbl",
    "zbr", "zd", "zdr", "zdz", "zg", "zgł", "zgr", "zl", "zł", "zm", "zn", "zr", "zw", "zwr", "źd", "źdź",
    "źr", "żb", "żd", "żl", "żł", "żm", "żr", "żw",
};

// Single-syllable prefixes, longest first where they share a stem.
constexpr std::string_view kDefaultPrefixes[] = {
    "nie", "przed", "prze", "przy", "roz", "bez", "nad", "pod", "wy", "za", "po",
};

bool is_vowel_lower(char32_t cp) {
  switch (cp) {
    case U'a': case U'ą': case U'e': case U'ę': case U'i': case U'o':
    case U'ó': case U'u': case U'y': case U'é':
      return true;
    default:
      return false;
  }
}

struct Span {
  size_t begin;
  size_t end;
};

// Nucleus spans; a palatal `i` is included at the front of its nucleus.
std::vector<Span> find_nuclei(std::u32string_view word) {
  std::vector<Span> spans;
  const size_t n = word.size();
  for (size_t p = 0; p < n; ++p) {
    const char32_t c = unicode::to_lower(word[p]);
    if (!is_vowel_lower(c)) continue;
    const bool palatal = c == U'i' && p + 1 < n && is_vowel_lower(unicode::to_lower(word[p + 1]));
    if (palatal) continue;
    const bool after_palatal = p > 0 && unicode::to_lower(word[p - 1]) == U'i';
    spans.push_back({after_palatal ? p - 1 : p, p + 1});
  }
  return spans;
}

// Splits a consonant cluster into units, reading digraphs greedily.
std::vector<std::u32string> consonant_units(std::u32string_view cluster) {
  std::vector<std::u32string> units;
  size_t i = 0;
  while (i < cluster.size()) {
    if (i + 1 < cluster.size()) {
      const std::string pair = unicode::encode(unicode::to_lower(cluster.substr(i, 2)));
      if (std::find(kDigraphs.begin(), kDigraphs.end(), pair) != kDigraphs.end()) {
        units.emplace_back(cluster.substr(i, 2));
        i += 2;
        continue;
      }
    }
    units.emplace_back(cluster.substr(i, 1));
    ++i;
  }
  return units;
}

// Offset into the cluster where the next syllable starts.
size_t onset_start(std::u32string_view cluster, const SegmenterConfig& cfg) {
  if (cluster.empty()) return 0;
  const auto units = consonant_units(cluster);
  size_t offset = 0;
  for (size_t u = 0; u < units.size(); ++u) {
    std::u32string suffix;
    for (size_t k = u; k < units.size(); ++k) suffix += units[k];
    if (u + 1 == units.size() || cfg.legal_onsets.contains(unicode::encode(unicode::to_lower(suffix)))) {
      return offset;
    }
    offset += units[u].size();
  }
  return offset;
}

std::vector<std::u32string> syllabify_u32(std::u32string_view word, const SegmenterConfig& cfg) {
  const auto nuclei = find_nuclei(word);
  if (nuclei.size() <= 1) return {std::u32string(word)};
  std::vector<std::u32string> pieces;
  size_t start = 0;
  for (size_t k = 0; k + 1 < nuclei.size(); ++k) {
    const size_t cluster_begin = nuclei[k].end;
    const size_t cluster_end = nuclei[k + 1].begin;
    const size_t cut = cluster_begin + onset_start(word.substr(cluster_begin, cluster_end - cluster_begin), cfg);
    pieces.emplace_back(word.substr(start, cut - start));
    start = cut;
  }
  pieces.emplace_back(word.substr(start));
  return pieces;
}

int count_nuclei_u32(std::u32string_view word) { return static_cast<int>(find_nuclei(word).size()); }

bool is_punct_char(char32_t cp) {
  return !unicode::is_letter(cp) && !unicode::is_digit(cp) && !unicode::is_horizontal_space(cp) &&
         !unicode::is_line_break(cp);
}

// A run of letters whose case pattern is uniform: all lowercase, capitalized,
// or all uppercase.
enum class CaseShape { Lower, Capitalized, Upper };

struct CaseSegment {
  CaseShape shape;
  std::u32string letters;
};

std::vector<CaseSegment> case_segments(std::u32string_view word) {
  std::vector<CaseSegment> out;
  const size_t n = word.size();
  auto is = [&](size_t i, LetterCase c) { return unicode::letter_case(word[i]) == c; };
  // Capitalized segment: one uppercase letter up to the next uppercase one.
  auto capitalized_from = [&](size_t q) {
    size_t k = q + 1;
    while (k < n && !is(k, LetterCase::Upper)) ++k;
    out.push_back({CaseShape::Capitalized, std::u32string(word.substr(q, k - q))});
    return k;
  };
  size_t i = 0;
  while (i < n) {
    if (!is(i, LetterCase::Upper)) {
      size_t j = i;
      while (j < n && !is(j, LetterCase::Upper)) ++j;
      out.push_back({CaseShape::Lower, std::u32string(word.substr(i, j - i))});
      i = j;
      continue;
    }
    size_t j = i;
    while (j < n && !is(j, LetterCase::Lower)) ++j;
    if (j == n) {
      if (j - i >= 2) {
        out.push_back({CaseShape::Upper, std::u32string(word.substr(i))});
        i = n;
      } else {
        i = capitalized_from(i);
      }
      continue;
    }
    // The last uppercase letter of the run opens a capitalized segment.
    size_t q = j - 1;
    while (!is(q, LetterCase::Upper)) --q;
    if (q - i >= 2) {
      out.push_back({CaseShape::Upper, std::u32string(word.substr(i, q - i))});
      i = q;
    } else if (q - i == 1) {
      i = capitalized_from(i);
      continue;
    }
    i = capitalized_from(i);
  }
  return out;
}

// One lexical unit of a line: the tokens of a word, a digit run or a
// punctuation character, plus whether whitespace preceded it.
struct Item {
  std::vector<Token> tokens;
  bool space_before = false;
};

Token* first_rendered(std::vector<Token>& tokens) {
  for (auto& t : tokens) {
    if (!(t.is(specials::kCap) || t.is(specials::kUp))) return &t;
  }
  return nullptr;
}

bool is_rendered_piece(const Token& t) { return t.kind == TokenKind::Piece; }

bool needs_space(const Token* prev, const Token& cur) {
  if (prev == nullptr) return false;
  if (prev->kind == TokenKind::Space || cur.kind == TokenKind::Space) return false;
  if (is_rendered_piece(*prev) && is_rendered_piece(cur) && prev->joins_next && cur.joins_prev) return false;
  if (prev->kind == TokenKind::Punct && (prev->joins_next || attaches_to_next(prev->surface))) return false;
  if (cur.kind == TokenKind::Punct && (cur.joins_prev || attaches_to_previous(cur.surface))) return false;
  return true;
}

std::vector<Token> word_tokens(std::u32string_view letters, const SegmenterConfig& cfg) {
  std::vector<Token> tokens;
  size_t first_piece = 0;
  bool have_piece = false;
  for (const auto& segment : case_segments(letters)) {
    if (segment.shape == CaseShape::Capitalized) tokens.push_back(Token::special(specials::kCap));
    if (segment.shape == CaseShape::Upper) tokens.push_back(Token::special(specials::kUp));
    const std::u32string lower = unicode::to_lower(segment.letters);
    if (!have_piece) {
      first_piece = tokens.size();
      have_piece = true;
    }
    if (cfg.mode == SegmentMode::Char) {
      for (char32_t c : lower) tokens.push_back(Token::piece(unicode::encode(c)));
      continue;
    }
    const auto split = stem_prefixes(unicode::encode(lower), cfg);
    for (const auto& prefix : split.prefixes) tokens.push_back(Token::piece(prefix));
    for (const auto& piece : syllabify_u32(unicode::decode(split.core), cfg)) {
      tokens.push_back(Token::piece(unicode::encode(piece)));
    }
  }
  if (cfg.mode == SegmentMode::SubWord && have_piece) {
    Token* prev = nullptr;
    for (size_t k = first_piece; k < tokens.size(); ++k) {
      if (tokens[k].kind != TokenKind::Piece) continue;
      if (prev != nullptr) {
        prev->joins_next = true;
        tokens[k].joins_prev = true;
      }
      prev = &tokens[k];
    }
  }
  return tokens;
}

std::vector<Item> scan_line(std::u32string_view line, const SegmenterConfig& cfg) {
  std::vector<Item> items;
  bool pending_space = false;
  size_t i = 0;
  while (i < line.size()) {
    const char32_t c = line[i];
    if (unicode::is_horizontal_space(c) || unicode::is_line_break(c)) {
      pending_space = true;
      ++i;
      continue;
    }
    Item item;
    item.space_before = pending_space;
    pending_space = false;
    if (unicode::is_letter(c)) {
      size_t j = i;
      while (j < line.size() && unicode::is_letter(line[j])) ++j;
      item.tokens = word_tokens(line.substr(i, j - i), cfg);
      i = j;
    } else if (unicode::is_digit(c)) {
      size_t j = i;
      while (j < line.size() && unicode::is_digit(line[j])) ++j;
      if (cfg.mode == SegmentMode::Char) {
        for (size_t k = i; k < j; ++k) item.tokens.push_back(Token::piece(unicode::encode(line[k])));
      } else {
        item.tokens.push_back(Token::piece(unicode::encode(line.substr(i, j - i))));
      }
      i = j;
    } else {
      item.tokens.push_back(Token::punct(unicode::encode(c)));
      ++i;
    }
    items.push_back(std::move(item));
  }
  return items;
}

void emit_line_subword(std::vector<Item>& items, std::vector<Token>& out) {
  // Index into `out` of the last rendered token of the line so far.
  std::ptrdiff_t prev = -1;
  for (auto& item : items) {
    Token* first = first_rendered(item.tokens);
    if (prev >= 0 && first != nullptr) {
      Token& before = out[static_cast<size_t>(prev)];
      const bool predicted = needs_space(&before, *first);
      if (predicted && !item.space_before) {
        if (before.kind == TokenKind::Piece && first->kind == TokenKind::Piece) {
          before.joins_next = true;
          first->joins_prev = true;
        } else if (before.kind == TokenKind::Punct) {
          before.joins_next = true;
        } else {
          first->joins_prev = true;
        }
      } else if (!predicted && item.space_before) {
        out.push_back(Token::space());
      }
    }
    for (auto& t : item.tokens) {
      out.push_back(std::move(t));
      if (!(out.back().is(specials::kCap) || out.back().is(specials::kUp))) {
        prev = static_cast<std::ptrdiff_t>(out.size()) - 1;
      }
    }
  }
}

void emit_line_char(std::u32string_view line, const SegmenterConfig& cfg, std::vector<Token>& out) {
  size_t i = 0;
  while (i < line.size()) {
    const char32_t c = line[i];
    if (unicode::is_horizontal_space(c) || unicode::is_line_break(c)) {
      out.push_back(Token::space());
      ++i;
    } else if (unicode::is_letter(c)) {
      size_t j = i;
      while (j < line.size() && unicode::is_letter(line[j])) ++j;
      for (auto& t : word_tokens(line.substr(i, j - i), cfg)) out.push_back(std::move(t));
      i = j;
    } else if (unicode::is_digit(c)) {
      out.push_back(Token::piece(unicode::encode(c)));
      ++i;
    } else {
      out.push_back(Token::punct(unicode::encode(c)));
      ++i;
    }
  }
}

bool has_cased_letter(std::u32string_view text) {
  return std::any_of(text.begin(), text.end(),
                     [](char32_t c) { return unicode::letter_case(c) == LetterCase::Lower; });
}

}  // namespace

Token Token::special(std::string_view name) {
  if (name != specials::kUp && name != specials::kCap && name != specials::kEol && name != specials::kUnk) {
    throw std::invalid_argument("unknown special token: " + std::string(name));
  }
  return Token{TokenKind::Special, std::string(name), false, false};
}

Token Token::piece(std::string surface, bool joins_prev, bool joins_next) {
  return Token{TokenKind::Piece, std::move(surface), joins_prev, joins_next};
}

Token Token::punct(std::string surface, bool joins_prev, bool joins_next) {
  return Token{TokenKind::Punct, std::move(surface), joins_prev, joins_next};
}

Token Token::space() { return Token{TokenKind::Space, " ", false, false}; }

std::string Token::serialize() const {
  switch (kind) {
    case TokenKind::Special:
      return surface;
    case TokenKind::Space:
      return std::string(specials::kSpace);
    case TokenKind::Piece:
    case TokenKind::Punct:
      break;
  }
  std::string out;
  if (joins_prev) out += "--";
  out += surface;
  if (joins_next) out += "++";
  return out;
}

Token Token::parse(std::string_view text) {
  for (auto name : {specials::kUp, specials::kCap, specials::kEol, specials::kUnk}) {
    if (text == name) return special(name);
  }
  if (text == specials::kSpace) return space();
  bool joins_prev = false;
  bool joins_next = false;
  std::string_view core = text;
  if (core.size() > 2 && core.starts_with("--")) {
    joins_prev = true;
    core.remove_prefix(2);
  }
  if (core.size() > 2 && core.ends_with("++")) {
    joins_next = true;
    core.remove_suffix(2);
  }
  const std::u32string cps = unicode::decode(core);
  if (cps.size() == 1 && is_punct_char(cps[0]) && unicode::encode(cps) == core) {
    return punct(std::string(core), joins_prev, joins_next);
  }
  const bool piece_ok = !cps.empty() && std::all_of(cps.begin(), cps.end(), [](char32_t c) {
    return (unicode::is_letter(c) || unicode::is_digit(c)) && unicode::letter_case(c) != LetterCase::Upper;
  });
  if (piece_ok && unicode::encode(cps) == core) return piece(std::string(core), joins_prev, joins_next);
  return special(specials::kUnk);
}

std::string_view to_string(SegmentMode mode) { return mode == SegmentMode::Char ? "char" : "subword"; }

SegmentMode parse_segment_mode(std::string_view name) {
  if (name == "subword") return SegmentMode::SubWord;
  if (name == "char") return SegmentMode::Char;
  throw std::invalid_argument("unknown segmentation mode '" + std::string(name) + "' (expected subword or char)");
}

SegmenterConfig SegmenterConfig::defaults(SegmentMode mode) {
  SegmenterConfig cfg;
  cfg.mode = mode;
  for (auto p : kDefaultPrefixes) cfg.prefix_list.emplace_back(p);
  for (auto o : kDefaultOnsets) cfg.legal_onsets.emplace(o);
  return cfg;
}

void SegmenterConfig::validate() const {
  if (mode == SegmentMode::SubWord) {
    if (prefix_list.empty()) throw std::invalid_argument("prefix list must not be empty in sub-word mode");
    if (std::find(prefix_list.begin(), prefix_list.end(), "nie") == prefix_list.end()) {
      throw std::invalid_argument("prefix list must contain \"nie\"");
    }
  }
  for (const auto& p : prefix_list) {
    const auto cps = unicode::decode(p);
    if (cps.empty() || !std::all_of(cps.begin(), cps.end(), unicode::is_letter)) {
      throw std::invalid_argument("prefix '" + p + "' must be a non-empty letter string");
    }
  }
  for (auto single : {"b", "c", "ć", "d", "f", "g", "h", "j", "k", "l", "ł", "m", "n", "ń", "p", "r", "s", "ś",
                      "t", "w", "z", "ź", "ż"}) {
    if (!legal_onsets.contains(single)) {
      throw std::invalid_argument(std::string("legal onsets are missing the consonant '") + single + "'");
    }
  }
  if (min_core_vowels < 0) throw std::invalid_argument("min_core_vowels must be non-negative");
}

std::string normalize(std::string_view text) {
  const std::u32string cps = unicode::decode(unicode::nfc(text));
  std::u32string out;
  out.reserve(cps.size());
  bool pending_space = false;
  bool line_start = true;
  for (size_t i = 0; i < cps.size(); ++i) {
    const char32_t c = cps[i];
    if (unicode::is_line_break(c)) {
      if (c == U'\r' && i + 1 < cps.size() && cps[i + 1] == U'\n') ++i;
      out.push_back(U'\n');
      pending_space = false;
      line_start = true;
    } else if (unicode::is_horizontal_space(c)) {
      pending_space = !line_start;
    } else {
      if (pending_space) out.push_back(U' ');
      out.push_back(c);
      pending_space = false;
      line_start = false;
    }
  }
  return unicode::encode(out);
}

bool is_vowel(char32_t cp) { return is_vowel_lower(unicode::to_lower(cp)); }

int count_nuclei(std::string_view word) { return count_nuclei_u32(unicode::decode(word)); }

std::vector<std::string> syllabify(std::string_view word, const SegmenterConfig& cfg) {
  const std::u32string cps = unicode::decode(word);
  if (cps.empty()) throw std::invalid_argument("syllabify: empty word");
  if (!std::all_of(cps.begin(), cps.end(), unicode::is_letter)) {
    throw std::invalid_argument("syllabify: '" + std::string(word) + "' contains non-letters");
  }
  std::vector<std::string> out;
  for (const auto& piece : syllabify_u32(cps, cfg)) out.push_back(unicode::encode(piece));
  return out;
}

std::vector<std::string> syllabify(std::string_view word) {
  static const SegmenterConfig cfg = SegmenterConfig::defaults();
  return syllabify(word, cfg);
}

PrefixSplit stem_prefixes(std::string_view word, const SegmenterConfig& cfg) {
  PrefixSplit split{{}, std::string(word)};
  while (split.prefixes.size() < 2) {
    bool stripped = false;
    for (const auto& prefix : cfg.prefix_list) {
      if (split.core.size() <= prefix.size() || !split.core.starts_with(prefix)) continue;
      const std::string_view rest = std::string_view(split.core).substr(prefix.size());
      if (count_nuclei(rest) < cfg.min_core_vowels) continue;
      split.prefixes.push_back(prefix);
      split.core = std::string(rest);
      stripped = true;
      break;
    }
    if (!stripped) break;
  }
  return split;
}

std::vector<Token> tokenize(std::string_view text, const SegmenterConfig& cfg) {
  const std::u32string cps = unicode::decode(text);
  std::vector<Token> out;
  size_t line_begin = 0;
  while (true) {
    size_t line_end = cps.find(U'\n', line_begin);
    const bool last = line_end == std::u32string::npos;
    if (last) line_end = cps.size();
    const std::u32string_view line = std::u32string_view(cps).substr(line_begin, line_end - line_begin);
    if (cfg.mode == SegmentMode::Char) {
      emit_line_char(line, cfg, out);
    } else {
      auto items = scan_line(line, cfg);
      emit_line_subword(items, out);
    }
    if (last) break;
    out.push_back(Token::special(specials::kEol));
    line_begin = line_end + 1;
  }
  return out;
}

std::string detokenize(std::span<const Token> tokens, SegmentMode mode) {
  enum class Pending { None, Cap, Up };
  std::string out;
  const Token* prev = nullptr;
  Pending pending = Pending::None;
  bool upper_run = false;
  auto gap = [&](const Token& cur) {
    if (mode == SegmentMode::SubWord && needs_space(prev, cur)) out.push_back(' ');
  };
  static const Token unk_as_piece = Token::piece("unk");
  for (const Token& tok : tokens) {
    switch (tok.kind) {
      case TokenKind::Special:
        if (tok.is(specials::kEol)) {
          out.push_back('\n');
          prev = nullptr;
          pending = Pending::None;
          upper_run = false;
        } else if (tok.is(specials::kCap)) {
          pending = Pending::Cap;
          upper_run = false;
        } else if (tok.is(specials::kUp)) {
          pending = Pending::Up;
          upper_run = false;
        } else {
          gap(unk_as_piece);
          out += kUnknownGlyph;
          prev = &unk_as_piece;
          pending = Pending::None;
          upper_run = false;
        }
        break;
      case TokenKind::Space:
        out.push_back(' ');
        prev = &tok;
        pending = Pending::None;
        upper_run = false;
        break;
      case TokenKind::Punct:
        gap(tok);
        out += tok.surface;
        prev = &tok;
        pending = Pending::None;
        upper_run = false;
        break;
      case TokenKind::Piece: {
        gap(tok);
        std::u32string cps = unicode::decode(tok.surface);
        const bool linked = prev != nullptr && prev->kind == TokenKind::Piece && prev != &unk_as_piece &&
                            (mode == SegmentMode::Char || (prev->joins_next && tok.joins_prev));
        if (pending == Pending::Cap) {
          if (!cps.empty()) cps[0] = unicode::to_upper(cps[0]);
          upper_run = false;
        } else if (pending == Pending::Up) {
          cps = unicode::to_upper(cps);
          upper_run = true;
        } else if (upper_run && linked && has_cased_letter(cps)) {
          cps = unicode::to_upper(cps);
        } else {
          upper_run = false;
        }
        out += unicode::encode(cps);
        prev = &tok;
        pending = Pending::None;
        break;
      }
    }
  }
  return out;
}

int count_line_syllables(std::string_view line) {
  const std::u32string cps = unicode::decode(line);
  int total = 0;
  size_t i = 0;
  while (i < cps.size()) {
    if (!unicode::is_letter(cps[i])) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < cps.size() && unicode::is_letter(cps[j])) ++j;
    for (const auto& segment : case_segments(std::u32string_view(cps).substr(i, j - i))) {
      total += count_nuclei_u32(unicode::to_lower(segment.letters));
    }
    i = j;
  }
  return total;
}

std::string serialize_tokens(std::span<const Token> tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += tokens[i].serialize();
  }
  return out;
}

std::vector<Token> parse_tokens(std::string_view stream) {
  std::vector<Token> out;
  size_t i = 0;
  auto is_sep = [](char c) { return c == ' ' || c == '\n' || c == '\t' || c == '\r'; };
  while (i < stream.size()) {
    while (i < stream.size() && is_sep(stream[i])) ++i;
    size_t j = i;
    while (j < stream.size() && !is_sep(stream[j])) ++j;
    if (j > i) out.push_back(Token::parse(stream.substr(i, j - i)));
    i = j;
  }
  return out;
}

bool attaches_to_previous(std::string_view punct) {
  static constexpr std::string_view kClosing[] = {".", ",", ";", ":", "!", "?", ")", "]", "}",
                                                  "»", "”", "…", "%", "’", "‰"};
  return std::find(std::begin(kClosing), std::end(kClosing), punct) != std::end(kClosing);
}

bool attaches_to_next(std::string_view punct) {
  static constexpr std::string_view kOpening[] = {"(", "[", "{", "«", "„", "“", "‘", "¿", "¡"};
  return std::find(std::begin(kOpening), std::end(kOpening), punct) != std::end(kOpening);
}

}  // namespace sylaba
