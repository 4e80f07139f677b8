#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "sylaba/metrics.hpp"
#include "test_util.hpp"

using namespace sylaba;
using namespace sylaba::metrics;

TEST_CASE("word_runs") {
  const auto runs = word_runs(parse_tokens("_cap_ li++ --two ! x++ , --y _up_ a++ _cap_ --b"), SegmentMode::SubWord);
  REQUIRE(runs.size() == 4);
  CHECK(runs[0].text == "litwo");
  CHECK(runs[0].pieces == 2);
  CHECK(runs[0].well_formed);
  CHECK_FALSE(runs[1].well_formed);
  CHECK_FALSE(runs[2].well_formed);
  CHECK(runs[3].text == "ab");
  CHECK(runs[3].well_formed);
  const auto chars = word_runs(parse_tokens("k o t _sp_ a"), SegmentMode::Char);
  REQUIRE(chars.size() == 2);
  CHECK(chars[0].text == "kot");
  CHECK(chars[0].well_formed);
}

TEST_CASE("bad_words_ratio examples") {
  const Lexicon lex = {"ala", "ma", "kota"};
  CHECK(bad_words_ratio(parse_tokens("al++ --a ma ko++ --ta"), lex) == 0.0);
  const auto tokens = parse_tokens("al++ --a ma ko++ --ta x++ --y --z ma ma , _eol_");
  CHECK(bad_words_ratio(tokens, lex) == doctest::Approx(0.3));
  CHECK(bad_words_ratio(parse_tokens("ma kot"), lex) == doctest::Approx(0.5));
  CHECK(bad_words_ratio(parse_tokens("! _eol_"), lex) == 0.0);
  CHECK(bad_words_ratio(std::vector<Token>{}, lex) == 0.0);
  CHECK(bad_words_ratio(parse_tokens("--ma"), lex) == 1.0);
  CHECK(bad_words_ratio(parse_tokens("ma++"), lex) == 1.0);
}

TEST_CASE("property: corpus retokenization has no bad words") {
  const auto text = testutil::korpus_text();
  for (auto mode : {SegmentMode::SubWord, SegmentMode::Char}) {
    const auto tokens = tokenize(text, SegmenterConfig::defaults(mode));
    const auto lex = build_lexicon(tokens, mode);
    CHECK(bad_words_ratio(tokens, lex, mode) == 0.0);
  }
}

TEST_CASE("property: substituting into a good run never lowers the ratio") {
  const auto tokens = tokenize(testutil::poem_text(), SegmenterConfig::defaults());
  const auto lex = build_lexicon(tokens, SegmentMode::SubWord);
  // Run index of every piece position.
  std::vector<int> run_of(tokens.size(), -1);
  std::vector<std::size_t> piece_positions;
  {
    const auto runs = word_runs(tokens, SegmentMode::SubWord);
    std::size_t run = 0, used = 0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (tokens[i].kind != TokenKind::Piece) continue;
      if (used == runs[run].pieces) {
        ++run;
        used = 0;
      }
      run_of[i] = static_cast<int>(run);
      ++used;
      piece_positions.push_back(i);
    }
  }
  std::vector<bool> dirty(tokens.size(), false);
  std::mt19937_64 rng(8);
  auto current = tokens;
  double ratio = bad_words_ratio(current, lex);
  CHECK(ratio == 0.0);
  for (int step = 0; step < 200; ++step) {
    const auto i = piece_positions[rng() % piece_positions.size()];
    if (dirty[static_cast<std::size_t>(run_of[i])]) continue;
    dirty[static_cast<std::size_t>(run_of[i])] = true;
    if (rng() % 2) {
      current[i] = Token::special(specials::kUnk);
    } else {
      current[i].surface = "qqq";
    }
    const double next = bad_words_ratio(current, lex);
    CHECK(next >= ratio);
    ratio = next;
  }
  CHECK(ratio > 0.0);
}

TEST_CASE("metre_stats") {
  std::string quatrain;
  for (const auto& l : testutil::quatrain()) quatrain += l + "\n";
  const auto q = metre_stats(quatrain);
  CHECK(q.alexandrine_rate == 1.0);
  CHECK(q.lines == 4);
  CHECK(q.histogram == std::map<int, int>{{13, 4}});
  const auto e = metre_stats("");
  CHECK(e.histogram.empty());
  CHECK(e.alexandrine_rate == 0.0);
  const auto one = metre_stats(testutil::quatrain()[3]);
  CHECK(one.histogram == std::map<int, int>{{13, 1}});
  CHECK(one.alexandrine_rate == 1.0);
  const auto mixed = metre_stats("Ala ma kota\n\nLitwo! Ojczyzno moja! ty jesteś jak zdrowie;\n");
  CHECK(mixed.lines == 2);
  CHECK(mixed.alexandrine_rate == 0.5);
  const auto poem = metre_stats(testutil::poem_text());
  CHECK(poem.alexandrine_rate >= 0.95);
  int total = 0;
  for (const auto& [k, v] : poem.histogram) total += v;
  CHECK(total == poem.lines);
}

TEST_CASE("compression_ratio") {
  const auto cfg = SegmenterConfig::defaults();
  CHECK(compression_ratio("kot", cfg) == 3.0);
  CHECK(compression_ratio("\n\n\n", cfg) == 1.0);
  CHECK_THROWS_AS(compression_ratio("", cfg), std::invalid_argument);
  CHECK(compression_ratio("Ala", cfg) > 1.0);
  const double r = compression_ratio(testutil::korpus_text(), cfg);
  CHECK(r >= 2.5);
  CHECK(r <= 4.0);
}

TEST_CASE("mean_step_entropy") {
  const std::vector<double> uniform(10, std::log(7.0));
  CHECK(mean_step_entropy(uniform) == doctest::Approx(std::log(7.0)));
  const std::vector<double> zeros(5, 0.0);
  CHECK(mean_step_entropy(zeros) == 0.0);
  CHECK(mean_step_entropy(std::vector<double>{}) == 0.0);
}

TEST_CASE("report serialization") {
  MetricsReport r;
  r.label = "subword";
  r.initial_loss = 6.5;
  r.loss_series = {3.0, 2.0};
  r.bad_words_series = {0.5, 0.25};
  r.metre_histogram = {{12, 1}, {13, 3}};
  r.alexandrine_rate = 0.75;
  r.compression_ratio = 2.9;
  r.entropy_by_temperature = {{0.2, 0.1}, {1.4, 2.0}};
  CHECK_NOTHROW(r.validate());
  const auto kv = r.to_key_values();
  CHECK(kv.rfind("#sylaba-metrics 1\n", 0) == 0);
  CHECK(kv.find("label=subword") != std::string::npos);
  CHECK(kv.find("loss_series=") != std::string::npos);
  CHECK(kv.find("bad_words_series=") != std::string::npos);
  CHECK(kv.find("metre.13=3") != std::string::npos);
  CHECK(r.to_text().find(kv) != std::string::npos);
  r.bad_words_series = {1.5};
  CHECK_THROWS_AS(r.validate(), std::logic_error);
  r.bad_words_series = {};
  r.alexandrine_rate = -0.1;
  CHECK_THROWS_AS(r.validate(), std::logic_error);

  const std::vector<double> v = {1.5, 0.25};
  const auto tsv = series_tsv(v, 0);
  CHECK(tsv.rfind("epoch\tvalue\n0\t1.5", 0) == 0);
  CHECK(tsv.find("\n1\t0.25") != std::string::npos);
}
