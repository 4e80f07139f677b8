#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "sylaba/corpus.hpp"
#include "test_util.hpp"

using namespace sylaba;

namespace {

std::vector<Token> pieces(const std::vector<std::string>& surfaces) {
  std::vector<Token> out;
  for (const auto& s : surfaces) out.push_back(Token::piece(s));
  return out;
}

std::vector<int> iota_vec(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i % 1000);
  return v;
}

}  // namespace

TEST_CASE("build_vocab examples") {
  const auto vocab = build_vocab(pieces({"a", "b", "a"}));
  CHECK(vocab.size() == 6);
  CHECK(vocab.at(0) == "_unk_");
  CHECK(vocab.at(1) == "_eol_");
  CHECK(vocab.at(2) == "_cap_");
  CHECK(vocab.at(3) == "_up_");
  CHECK(vocab.at(4) == "a");
  CHECK(vocab.at(5) == "b");
  CHECK_THROWS_AS(build_vocab(std::vector<Token>{}), std::invalid_argument);
}

TEST_CASE("encode and decode") {
  const auto vocab = build_vocab(pieces({"a", "b"}));
  const auto unknown = pieces({"zzz"});
  CHECK(vocab.encode(unknown) == std::vector<int>{0});
  const std::vector<int> bad = {vocab.size()};
  CHECK_THROWS_AS(vocab.decode(bad), std::out_of_range);
  const std::vector<int> neg = {-1};
  CHECK_THROWS_AS(vocab.decode(neg), std::out_of_range);
  CHECK(vocab.find("b") == 5);
  CHECK(vocab.find("c") == -1);
}

TEST_CASE("vocab text format") {
  const auto tokens = tokenize(testutil::poem_text(), SegmenterConfig::defaults());
  const auto vocab = build_vocab(tokens);
  const auto text = vocab.to_text();
  CHECK(text.rfind("#sylaba-vocab 1 ", 0) == 0);
  CHECK(Vocab::from_text(text) == vocab);
  CHECK_THROWS_AS(Vocab(std::vector<std::string>{"a", "_eol_", "_cap_", "_up_"}), std::invalid_argument);
  CHECK_THROWS_AS(Vocab(std::vector<std::string>{"_unk_", "_eol_", "_cap_", "_up_", "x", "x"}), std::invalid_argument);
}

TEST_CASE("property: vocab is deterministic, dense and round-trips") {
  const auto tokens = tokenize(testutil::korpus_text(), SegmenterConfig::defaults());
  const auto a = build_vocab(tokens);
  const auto b = build_vocab(tokens);
  CHECK(a == b);
  for (int i = 0; i < a.size(); ++i) CHECK(a.find(a.at(i)) == i);
  const auto ids = a.encode(tokens);
  CHECK(a.decode(ids) == tokens);
  for (int id : ids) CHECK(id != Vocab::kUnkIndex);
}

TEST_CASE("chunk examples") {
  CHECK(chunk(iota_vec(79544), 400).size() == 198);
  const auto one = chunk(iota_vec(400), 400);
  REQUIRE(one.size() == 1);
  CHECK(one[0].input.size() == 399);
  CHECK(one[0].target.size() == 399);
  CHECK(chunk(iota_vec(399), 400).empty());
  CHECK(chunk(iota_vec(0), 400).empty());
  CHECK_THROWS_AS(chunk(iota_vec(10), 1), std::invalid_argument);
}

TEST_CASE("property: chunk arithmetic and shift") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng() % 5000;
    const std::size_t len = 2 + rng() % 600;
    std::vector<int> ids(n);
    for (auto& x : ids) x = static_cast<int>(rng() % 50);
    const auto chunks = chunk(ids, len);
    REQUIRE(chunks.size() == n / len);
    std::vector<int> rebuilt;
    for (std::size_t c = 0; c < chunks.size(); ++c) {
      const auto& ch = chunks[c];
      REQUIRE(ch.input.size() == len - 1);
      REQUIRE(ch.target.size() == len - 1);
      for (std::size_t t = 0; t + 1 < ch.input.size(); ++t) CHECK(ch.input[t + 1] == ch.target[t]);
      rebuilt.insert(rebuilt.end(), ch.input.begin(), ch.input.end());
      rebuilt.push_back(ch.target.back());
    }
    CHECK(std::equal(rebuilt.begin(), rebuilt.end(), ids.begin()));
  }
}
