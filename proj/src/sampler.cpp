#include "sylaba/sampler.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sylaba::sampler {

void GenerationConfig::validate() const {
  if (length < 1) throw std::invalid_argument("generation length must be >= 1");
  if (mode == DecodeMode::Sample && !(temperature > 0.0)) throw std::invalid_argument("temperature must be > 0");
}

std::vector<double> temperature_softmax(std::span<const double> logits, double temperature) {
  if (!(temperature > 0.0)) throw std::invalid_argument("temperature must be > 0");
  if (logits.empty()) throw std::invalid_argument("empty logit vector");
  double max = -std::numeric_limits<double>::infinity();
  for (double z : logits) {
    if (!std::isfinite(z)) throw std::invalid_argument("non-finite logit");
    max = std::max(max, z);
  }
  std::vector<double> q(logits.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    q[i] = std::exp((logits[i] - max) / temperature);
    sum += q[i];
  }
  for (double& v : q) v /= sum;
  return q;
}

int sample_index(std::span<const double> q, Rng& rng) {
  if (q.empty()) throw std::invalid_argument("empty distribution");
  double sum = 0.0;
  for (double p : q) {
    if (!(p >= 0.0)) throw std::invalid_argument("negative or NaN probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-6) throw std::invalid_argument("distribution does not sum to 1");
  const double u = uniform01(rng) * sum;
  double cdf = 0.0;
  int last_positive = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] <= 0.0) continue;
    cdf += q[i];
    last_positive = static_cast<int>(i);
    if (u < cdf) return last_positive;
  }
  return last_positive;
}

int argmax(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("argmax of empty vector");
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return static_cast<int>(best);
}

double entropy(std::span<const double> q) {
  double h = 0.0;
  for (double p : q) {
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

Generation generate_from(const nnet::ModelParams<float>& params, const Vocab& vocab, SegmentMode mode,
                         std::span<const int> prime, const GenerationConfig& cfg) {
  cfg.validate();
  if (prime.empty()) throw std::invalid_argument("prime is empty");
  if (params.shape().vocab_size != vocab.size()) throw std::invalid_argument("model and vocabulary disagree");

  Generation out;
  out.prime.assign(prime.begin(), prime.end());
  auto state = nnet::HiddenState<float>::zeros(params.shape());
  nnet::Vector<float> logits;
  for (int idx : prime) logits = nnet::forward_step(params, idx, state);

  Rng rng(cfg.rng_seed);
  std::vector<double> z(static_cast<std::size_t>(logits.size()));
  for (int step = 0; step < cfg.length; ++step) {
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = logits[static_cast<Eigen::Index>(i)];
    int next = 0;
    if (cfg.mode == DecodeMode::Argmax) {
      next = argmax(z);
      out.step_entropy.push_back(0.0);
    } else {
      const auto q = temperature_softmax(z, cfg.temperature);
      next = sample_index(q, rng);
      out.step_entropy.push_back(entropy(q));
    }
    out.indices.push_back(next);
    if (step + 1 < cfg.length) logits = nnet::forward_step(params, next, state);
  }

  out.tokens = vocab.decode(out.indices);
  auto all = vocab.decode(out.prime);
  all.insert(all.end(), out.tokens.begin(), out.tokens.end());
  out.text = detokenize(all, mode);
  return out;
}

Generation generate(const nnet::LanguageModel& model, const GenerationConfig& cfg) {
  const std::string normalized = normalize(cfg.prime_text);
  const auto tokens = tokenize(normalized, model.segmenter);
  if (tokens.empty()) throw std::invalid_argument("prime text is empty after tokenization");
  const auto prime = model.vocab.encode(tokens);
  auto out = generate_from(model.params, model.vocab, model.segmenter.mode, prime, cfg);
  const std::string prime_rendered = detokenize(model.vocab.decode(prime), model.segmenter.mode);
  if (prime_rendered != normalized && out.text.compare(0, prime_rendered.size(), prime_rendered) == 0) {
    out.text = normalized + out.text.substr(prime_rendered.size());
  }
  return out;
}

}  // namespace sylaba::sampler
