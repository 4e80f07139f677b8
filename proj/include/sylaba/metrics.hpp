#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "sylaba/corpus.hpp"
#include "sylaba/nnet.hpp"
#include "sylaba/segmenter.hpp"

namespace sylaba::metrics {

using Lexicon = std::unordered_set<std::string>;

// A word run: the Piece tokens of one word. In sub-word streams pieces are
// chained by connectors (a link exists if either side carries its marker);
// in char streams every adjacent pair of pieces is linked. `_cap_`/`_up_`
// between pieces are transparent; anything else ends the run.
struct WordRun {
  std::size_t pieces = 0;
  std::string text;         // joined lowercase surfaces
  bool well_formed = true;  // every link marked on both sides, no dangling marker
};

std::vector<WordRun> word_runs(std::span<const Token> tokens, SegmentMode mode);

// Joined strings of the well-formed runs of a tokenized corpus.
Lexicon build_lexicon(std::span<const Token> corpus_tokens, SegmentMode mode);

// Fraction of Piece tokens that belong to ill-formed or unknown runs; 0 when
// there are no pieces.
double bad_words_ratio(std::span<const Token> tokens, const Lexicon& lexicon, SegmentMode mode = SegmentMode::SubWord);

struct MetreStats {
  std::map<int, int> histogram;  // syllable count -> lines
  double alexandrine_rate = 0.0;
  int lines = 0;
};

inline constexpr int kAlexandrineSyllables = 13;

// Non-empty lines only.
MetreStats metre_stats(std::string_view text);

// Char-mode token count over sub-word token count for the same text.
// Throws std::invalid_argument on empty text.
double compression_ratio(std::string_view text, const SegmenterConfig& cfg);

// Mean of per-step entropies; 0 for an empty run.
double mean_step_entropy(std::span<const double> step_entropy);

// Per-epoch bad-words probe: a fixed generation from the given prime.
inline constexpr int kProbeLength = 2000;
inline constexpr double kProbeTemperature = 0.8;
inline constexpr std::uint64_t kProbeSeed = 20190101;

double probe_bad_words(const nnet::ModelParams<float>& params, const Vocab& vocab, SegmentMode mode,
                       std::span<const int> prime, const Lexicon& lexicon, int length = kProbeLength);

struct MetricsReport {
  std::string label;
  double initial_loss = 0.0;
  std::vector<double> loss_series;
  std::vector<double> bad_words_series;
  std::map<int, int> metre_histogram;
  double alexandrine_rate = 0.0;
  double compression_ratio = 0.0;
  std::map<double, double> entropy_by_temperature;

  // Throws std::logic_error when a fraction leaves [0, 1].
  void validate() const;
  // `key=value` lines under a `#sylaba-metrics 1` header.
  std::string to_key_values() const;
  // Readable summary followed by the key-value block.
  std::string to_text() const;
};

// Two tab-separated columns: epoch and value, numbered from first_epoch.
std::string series_tsv(std::span<const double> values, int first_epoch = 1);

}  // namespace sylaba::metrics
