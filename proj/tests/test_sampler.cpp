#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "sylaba/sampler.hpp"
#include "test_util.hpp"

using namespace sylaba;
using namespace sylaba::sampler;

namespace {

std::vector<double> plain_softmax(const std::vector<double>& z) {
  const double mx = *std::max_element(z.begin(), z.end());
  std::vector<double> q(z.size());
  double sum = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    q[i] = std::exp(z[i] - mx);
    sum += q[i];
  }
  for (auto& x : q) x /= sum;
  return q;
}

std::vector<double> fuzz_logits(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(2, 60);
  std::uniform_real_distribution<double> scale(0.1, 20.0);
  std::normal_distribution<double> n(0, 1);
  const double s = scale(rng);
  std::vector<double> z(static_cast<std::size_t>(len(rng)));
  for (auto& x : z) x = s * n(rng);
  return z;
}

nnet::LanguageModel tiny_model() {
  nnet::LanguageModel m;
  m.segmenter = SegmenterConfig::defaults();
  m.vocab = build_vocab(tokenize(testutil::poem_text(), m.segmenter));
  m.config.vocab_size = m.vocab.size();
  m.config.hidden_size = 16;
  m.config.n_layers = 2;
  m.params = nnet::init_params<float>(m.config);
  return m;
}

}  // namespace

TEST_CASE("temperature_softmax examples") {
  const std::vector<double> z = {1, 2};
  const auto q = temperature_softmax(z, 0.5);
  CHECK(q[0] == doctest::Approx(0.11920).epsilon(1e-4));
  CHECK(q[1] == doctest::Approx(0.88080).epsilon(1e-4));
  CHECK(std::abs(q[0] - 0.11920292202211755) < 1e-12);
  const std::vector<double> zero = {0, 0};
  CHECK(temperature_softmax(zero, 1.0) == std::vector<double>{0.5, 0.5});
  CHECK_THROWS_AS(temperature_softmax(z, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(temperature_softmax(z, -1.0), std::invalid_argument);
  const std::vector<double> nan = {0, std::nan("")};
  CHECK_THROWS_AS(temperature_softmax(nan, 1.0), std::invalid_argument);
  const std::vector<double> big = {1e308, -1e308};
  const auto qb = temperature_softmax(big, 0.01);
  CHECK(qb[0] == 1.0);
}

TEST_CASE("sample_index") {
  Rng rng(3);
  const std::vector<double> one = {0, 1, 0};
  for (int i = 0; i < 100; ++i) CHECK(sample_index(one, rng) == 1);
  const std::vector<double> q = {0.25, 0.75};
  Rng a(99), b(99);
  int ones = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const int x = sample_index(q, a);
    CHECK(x == sample_index(q, b));
    ones += x;
  }
  CHECK(std::abs(static_cast<double>(ones) / n - 0.75) < 0.01);
  const std::vector<double> bad = {0.5, 0.6};
  CHECK_THROWS_AS(sample_index(bad, rng), std::invalid_argument);
  const std::vector<double> neg = {-0.5, 1.5};
  CHECK_THROWS_AS(sample_index(neg, rng), std::invalid_argument);
}

TEST_CASE("argmax and entropy") {
  const std::vector<double> v = {1, 3, 3, 2};
  CHECK(argmax(v) == 1);
  const std::vector<double> u(4, 0.25);
  CHECK(entropy(u) == doctest::Approx(std::log(4.0)));
  const std::vector<double> d = {0, 1, 0};
  CHECK(entropy(d) == 0.0);
}

TEST_CASE("property: temperature softmax") {
  std::mt19937_64 rng(2024);
  const std::vector<double> temps = {0.2, 0.5, 0.8, 1.0, 1.4};
  for (int trial = 0; trial < 1000; ++trial) {
    const auto z = fuzz_logits(rng);
    std::vector<double> shifted = z;
    const double c = std::uniform_real_distribution<double>(-50, 50)(rng);
    for (auto& x : shifted) x += c;
    double prev_entropy = -1;
    for (double t : temps) {
      const auto q = temperature_softmax(z, t);
      double sum = 0;
      for (double x : q) sum += x;
      CHECK(std::abs(sum - 1.0) < 1e-9);
      const auto qs = temperature_softmax(shifted, t);
      for (std::size_t i = 0; i < q.size(); ++i) CHECK(std::abs(q[i] - qs[i]) < 1e-9);
      CHECK(argmax(q) == argmax(z));
      const double h = entropy(q);
      CHECK(h > prev_entropy);
      prev_entropy = h;
    }
    CHECK(temperature_softmax(z, 1.0) == plain_softmax(z));
    std::vector<double> rounded = z;
    for (auto& x : rounded) x = std::round(x);
    const auto top = static_cast<std::size_t>(argmax(rounded));
    if (std::count(rounded.begin(), rounded.end(), rounded[top]) == 1) {
      CHECK(temperature_softmax(rounded, 1e-3)[top] >= 1 - 1e-6);
    }
  }
}

TEST_CASE("generation config validation") {
  GenerationConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.length = -1;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.temperature = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.temperature = 0;
  cfg.mode = DecodeMode::Argmax;
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("generate") {
  const auto m = tiny_model();
  GenerationConfig cfg;
  cfg.length = 80;
  cfg.rng_seed = 12;
  const auto a = generate(m, cfg);
  const auto b = generate(m, cfg);
  CHECK(a.indices == b.indices);
  CHECK(a.text == b.text);
  CHECK(a.indices.size() == 80);
  CHECK(a.tokens.size() == 80);
  CHECK(a.step_entropy.size() == 80);
  CHECK(a.text.rfind(std::string(kDefaultPrime), 0) == 0);
  for (double h : a.step_entropy) CHECK(h > 0);
  cfg.rng_seed = 13;
  CHECK(generate(m, cfg).indices != a.indices);

  cfg.mode = DecodeMode::Argmax;
  const auto g = generate(m, cfg);
  CHECK(g.indices == generate(m, cfg).indices);
  for (double h : g.step_entropy) CHECK(h == 0.0);

  cfg.prime_text = "";
  CHECK_THROWS_AS(generate(m, cfg), std::invalid_argument);
  cfg.prime_text = "Xqzv wrrr!";
  CHECK_NOTHROW(generate(m, cfg));
  cfg.length = 0;
  CHECK_THROWS_AS(generate(m, cfg), std::invalid_argument);
}

TEST_CASE("temperature sweep raises mean entropy") {
  const auto m = tiny_model();
  double prev = -1;
  std::vector<std::vector<int>> outputs;
  for (double t : {0.2, 0.8, 1.4}) {
    GenerationConfig cfg;
    cfg.length = 200;
    cfg.temperature = t;
    const auto g = generate(m, cfg);
    double mean = 0;
    for (double h : g.step_entropy) mean += h;
    mean /= static_cast<double>(g.step_entropy.size());
    CHECK(mean > prev);
    prev = mean;
    for (const auto& o : outputs) CHECK(o != g.indices);
    outputs.push_back(g.indices);
  }
}
