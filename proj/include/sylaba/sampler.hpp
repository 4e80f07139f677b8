#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sylaba/checkpoint.hpp"
#include "sylaba/corpus.hpp"
#include "sylaba/nnet.hpp"
#include "sylaba/rng.hpp"
#include "sylaba/segmenter.hpp"

namespace sylaba::sampler {

enum class DecodeMode : std::uint8_t { Sample, Argmax };

inline constexpr std::string_view kDefaultPrime = "Litwo! Ojczyzno moja!";

struct GenerationConfig {
  std::string prime_text = std::string(kDefaultPrime);
  int length = 400;
  double temperature = 0.8;
  std::uint64_t rng_seed = 1;
  DecodeMode mode = DecodeMode::Sample;

  // Throws std::invalid_argument.
  void validate() const;
};

// q_i = exp(z_i / T) / sum_j exp(z_j / T), with the maximum subtracted first.
// Throws std::invalid_argument for T <= 0 or non-finite logits.
std::vector<double> temperature_softmax(std::span<const double> logits, double temperature);

// Inverse-CDF draw. Throws std::invalid_argument unless q is a distribution
// (non-negative, sum within 1e-6 of 1).
int sample_index(std::span<const double> q, Rng& rng);

// Lowest index among the maxima.
int argmax(std::span<const double> values);

// Shannon entropy in nats.
double entropy(std::span<const double> q);

struct Generation {
  std::vector<int> prime;
  std::vector<int> indices;
  std::vector<Token> tokens;
  // Prime text followed by the rendered continuation.
  std::string text;
  // Entropy of the distribution each token was drawn from (0 in Argmax mode).
  std::vector<double> step_entropy;
};

// Feeds `prime` through the model, then produces cfg.length tokens.
// cfg.prime_text is not used; text renders prime and continuation together.
Generation generate_from(const nnet::ModelParams<float>& params, const Vocab& vocab, SegmentMode mode,
                         std::span<const int> prime, const GenerationConfig& cfg);

// Tokenizes cfg.prime_text with the model's segmenter; out-of-vocabulary
// tokens become `_unk_`. Throws std::invalid_argument on an empty prime.
Generation generate(const nnet::LanguageModel& model, const GenerationConfig& cfg);

}  // namespace sylaba::sampler
