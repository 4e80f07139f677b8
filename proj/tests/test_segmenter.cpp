#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "sylaba/segmenter.hpp"
#include "sylaba/unicode.hpp"
#include "test_util.hpp"

using namespace sylaba;

namespace {

using Strings = std::vector<std::string>;

// Vowel letters minus every `i` that directly precedes another vowel.
int oracle_nuclei(const std::u32string& word) {
  static const std::u32string vowels = U"aąeęioóuyé";
  auto vowel = [&](char32_t c) { return vowels.find(c) != std::u32string::npos; };
  int n = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!vowel(word[i])) continue;
    if (word[i] == U'i' && i + 1 < word.size() && vowel(word[i + 1])) continue;
    ++n;
  }
  return n;
}

std::vector<std::string> lowercase_words(const std::string& text) {
  std::vector<std::string> words;
  std::u32string cur;
  for (char32_t c : unicode::decode(text)) {
    if (unicode::is_letter(c)) {
      cur += unicode::to_lower(c);
    } else if (!cur.empty()) {
      words.push_back(unicode::encode(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) words.push_back(unicode::encode(cur));
  return words;
}

std::string roundtrip(const std::string& text, SegmentMode mode) {
  const auto cfg = SegmenterConfig::defaults(mode);
  const auto tokens = tokenize(text, cfg);
  return detokenize(tokens, mode);
}

}  // namespace

TEST_CASE("normalize") {
  CHECK(normalize("a \r\n b") == "a\nb");
  CHECK(normalize("Litwo!  Ojczyzno") == "Litwo! Ojczyzno");
  CHECK(normalize("x\ty\r") == "x y\n");
  CHECK(normalize("e\xCC\x81") == "\xC3\xA9");
  CHECK(normalize("") == "");
  const std::string once = normalize("  Ala \t ma\r\r\n  kota  \n");
  CHECK(normalize(once) == once);
}

TEST_CASE("vowels and nuclei") {
  for (char32_t c : std::u32string(U"aąeęioóuy")) CHECK(is_vowel(c));
  for (char32_t c : std::u32string(U"bcćdłńrszźż")) CHECK_FALSE(is_vowel(c));
  CHECK(count_nuclei("moja") == 2);
  CHECK(count_nuclei("niebo") == 2);
  CHECK(count_nuclei("zdrowie") == 2);
  CHECK(count_nuclei("w") == 0);
  CHECK(count_nuclei("ojczyzno") == 3);
}

TEST_CASE("syllabify examples") {
  CHECK(syllabify("moja") == Strings{"mo", "ja"});
  CHECK(syllabify("w") == Strings{"w"});
  CHECK(syllabify("ojczyzno") == Strings{"oj", "czy", "zno"});
  CHECK(syllabify("trzeba") == Strings{"trze", "ba"});
  CHECK(syllabify("zdrowie") == Strings{"zdro", "wie"});
  CHECK(syllabify("dobry") == Strings{"do", "bry"});
  CHECK(syllabify("piękność") == Strings{"pię", "kność"});
  CHECK_THROWS_AS(syllabify(""), std::invalid_argument);
  CHECK_THROWS_AS(syllabify("a1"), std::invalid_argument);
}

TEST_CASE("stem_prefixes examples") {
  const auto cfg = SegmenterConfig::defaults();
  CHECK(stem_prefixes("niedobry", cfg) == PrefixSplit{{"nie"}, "dobry"});
  CHECK(stem_prefixes("kot", cfg) == PrefixSplit{{}, "kot"});
  CHECK(stem_prefixes("niebo", cfg) == PrefixSplit{{}, "niebo"});
  CHECK(stem_prefixes("niezapomniany", cfg) == PrefixSplit{{"nie", "za"}, "pomniany"});
}

TEST_CASE("tokenize examples") {
  const auto cfg = SegmenterConfig::defaults();
  CHECK(serialize_tokens(tokenize("Litwo!", cfg)) == "_cap_ li++ --two !");
  CHECK(serialize_tokens(tokenize("a\nb", cfg)) == "a _eol_ b");
  CHECK(serialize_tokens(tokenize("KSIĘGA", cfg)) == "_up_ księ++ --ga");
  CHECK(serialize_tokens(tokenize("niedobry", cfg)) == "nie++ --do++ --bry");
  CHECK(tokenize("", cfg).empty());
}

TEST_CASE("detokenize examples") {
  const std::vector<Token> joined = {Token::piece("a", false, true), Token::piece("b", true, false)};
  CHECK(detokenize(joined) == "ab");
  const std::vector<Token> dangling = {Token::piece("a", false, true), Token::piece("b")};
  CHECK(detokenize(dangling) == "a b");
  const std::vector<Token> loose = {Token::piece("a"), Token::piece("b")};
  CHECK(detokenize(loose) == "a b");
  const std::vector<Token> eol = {Token::special(specials::kEol)};
  CHECK(detokenize(eol) == "\n");
  CHECK(detokenize(parse_tokens("_cap_ li++ --two !")) == "Litwo!");
  CHECK(detokenize(parse_tokens("_up_ księ++ --ga")) == "KSIĘGA");
  CHECK(detokenize(parse_tokens("_unk_")) == std::string(kUnknownGlyph));
}

TEST_CASE("token serialization") {
  CHECK(Token::parse("--po++") == Token::piece("po", true, true));
  CHECK(Token::parse("_eol_") == Token::special(specials::kEol));
  CHECK(Token::parse("_sp_") == Token::space());
  CHECK(Token::parse("!") == Token::punct("!"));
  CHECK(Token::parse("").is(specials::kUnk));
  CHECK(Token::parse("a b").is(specials::kUnk));
  const auto tokens = tokenize(testutil::quatrain()[0], SegmenterConfig::defaults());
  CHECK(parse_tokens(serialize_tokens(tokens)) == tokens);
}

TEST_CASE("count_line_syllables") {
  for (const auto& line : testutil::quatrain()) CHECK(count_line_syllables(line) == 13);
  CHECK(count_line_syllables("") == 0);
  CHECK(count_line_syllables("!?,") == 0);
  CHECK(count_line_syllables("Ala ma kota") == 5);
}

TEST_CASE("config validation") {
  auto cfg = SegmenterConfig::defaults();
  CHECK_NOTHROW(cfg.validate());
  cfg.prefix_list = {"za"};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.prefix_list = {};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  CHECK(parse_segment_mode("char") == SegmentMode::Char);
  CHECK(parse_segment_mode("subword") == SegmentMode::SubWord);
  CHECK_THROWS_AS(parse_segment_mode("word"), std::invalid_argument);
}

TEST_CASE("property: roundtrip on corpus lines") {
  const auto text = testutil::korpus_text() + testutil::poem_text();
  for (auto mode : {SegmentMode::SubWord, SegmentMode::Char}) {
    CHECK(roundtrip(text, mode) == text);
    int failures = 0;
    for (const auto& line : testutil::split_lines(text)) {
      if (roundtrip(line, mode) != line) ++failures;
    }
    CHECK(failures == 0);
  }
}

TEST_CASE("property: roundtrip on odd inputs") {
  const std::vector<std::string> cases = {
      "McDonald i DDT-owiec", "1811r. - (w Wilnie)", "„Tak” — rzekł.", "a,b.c", "ÀÉ ǅ İ",
      "x  y", "...!!!", "Żółć: 3,14%", "a\n\nb", " ", "'", "a'b", "ŁÓDŹ łódź",
  };
  for (const auto& raw : cases) {
    const auto text = normalize(raw);
    CHECK(roundtrip(text, SegmentMode::SubWord) == text);
    CHECK(roundtrip(text, SegmentMode::Char) == text);
  }
}

TEST_CASE("property: pieces concatenate to the word and carry one nucleus") {
  const auto cfg = SegmenterConfig::defaults();
  int words = 0;
  for (const auto& word : lowercase_words(testutil::korpus_text())) {
    const auto pieces = syllabify(word, cfg);
    std::string joined;
    for (const auto& p : pieces) joined += p;
    REQUIRE(joined == word);
    const int n = oracle_nuclei(unicode::decode(word));
    CHECK(count_nuclei(word) == n);
    CHECK(static_cast<int>(pieces.size()) == std::max(1, n));
    if (n > 0) {
      for (const auto& p : pieces) CHECK(count_nuclei(p) == 1);
    }
    const auto split = stem_prefixes(word, cfg);
    std::string rebuilt;
    for (const auto& p : split.prefixes) rebuilt += p;
    CHECK(rebuilt + split.core == word);
    CHECK(split.prefixes.size() <= 2);
    if (!split.prefixes.empty()) CHECK(count_nuclei(split.core) >= cfg.min_core_vowels);
    ++words;
  }
  CHECK(words > 10000);
}

TEST_CASE("property: tokenize is deterministic and line syllables match nuclei") {
  const auto cfg = SegmenterConfig::defaults();
  for (const auto& line : testutil::split_lines(testutil::poem_text())) {
    CHECK(tokenize(line, cfg) == tokenize(line, cfg));
    int oracle = 0;
    for (const auto& w : lowercase_words(line)) oracle += oracle_nuclei(unicode::decode(w));
    CHECK(count_line_syllables(line) == oracle);
  }
}

TEST_CASE("property: detokenize is total") {
  const std::vector<std::string> pool = {"_unk_", "_eol_", "_cap_", "_up_", "_sp_", "a",   "--a", "b++",
                                         "--c++", "!",     ",",     "(",    ")",    "„",   "”",   "--!",
                                         "?++",   "ść",    "--ą",   "1",    "--9++", "-",  "—",   ":"};
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> len(0, 40);
  for (int i = 0; i < 5000; ++i) {
    std::vector<Token> tokens;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) tokens.push_back(Token::parse(pool[pick(rng)]));
    CHECK_NOTHROW(detokenize(tokens, SegmentMode::SubWord));
    CHECK_NOTHROW(detokenize(tokens, SegmentMode::Char));
  }
}
