#include "sylaba/metrics.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "sylaba/sampler.hpp"

namespace sylaba::metrics {

namespace {

bool is_case_marker(const Token& t) { return t.is(specials::kCap) || t.is(specials::kUp); }

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string join_series(std::span<const double> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += format_real(values[i]);
  }
  return out;
}

}  // namespace

std::vector<WordRun> word_runs(std::span<const Token> tokens, SegmentMode mode) {
  std::vector<WordRun> runs;
  const Token* last = nullptr;  // last piece of the open run
  auto close = [&] {
    if (last != nullptr && mode == SegmentMode::SubWord && last->joins_next) runs.back().well_formed = false;
    last = nullptr;
  };
  for (const Token& t : tokens) {
    if (is_case_marker(t)) continue;
    if (t.kind != TokenKind::Piece) {
      close();
      continue;
    }
    bool linked = false;
    if (last != nullptr) linked = mode == SegmentMode::Char || last->joins_next || t.joins_prev;
    if (!linked) {
      close();
      runs.push_back({});
      if (mode == SegmentMode::SubWord && t.joins_prev) runs.back().well_formed = false;
    } else if (mode == SegmentMode::SubWord && !(last->joins_next && t.joins_prev)) {
      runs.back().well_formed = false;
    }
    runs.back().pieces += 1;
    runs.back().text += t.surface;
    last = &t;
  }
  close();
  return runs;
}

Lexicon build_lexicon(std::span<const Token> corpus_tokens, SegmentMode mode) {
  Lexicon lexicon;
  for (auto& run : word_runs(corpus_tokens, mode)) {
    if (run.well_formed) lexicon.insert(std::move(run.text));
  }
  return lexicon;
}

double bad_words_ratio(std::span<const Token> tokens, const Lexicon& lexicon, SegmentMode mode) {
  std::size_t total = 0;
  std::size_t bad = 0;
  for (const auto& run : word_runs(tokens, mode)) {
    total += run.pieces;
    if (!run.well_formed || !lexicon.contains(run.text)) bad += run.pieces;
  }
  return total == 0 ? 0.0 : static_cast<double>(bad) / static_cast<double>(total);
}

MetreStats metre_stats(std::string_view text) {
  MetreStats stats;
  int alexandrines = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text.substr(begin, end - begin);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
      const int n = count_line_syllables(line);
      stats.histogram[n] += 1;
      stats.lines += 1;
      if (n == kAlexandrineSyllables) ++alexandrines;
    }
    begin = end + 1;
  }
  if (stats.lines > 0) stats.alexandrine_rate = static_cast<double>(alexandrines) / stats.lines;
  return stats;
}

double compression_ratio(std::string_view text, const SegmenterConfig& cfg) {
  if (text.empty()) throw std::invalid_argument("compression ratio of empty text");
  SegmenterConfig sub = cfg;
  sub.mode = SegmentMode::SubWord;
  SegmenterConfig chr = cfg;
  chr.mode = SegmentMode::Char;
  const auto n_sub = tokenize(text, sub).size();
  const auto n_chr = tokenize(text, chr).size();
  if (n_sub == 0) throw std::invalid_argument("text produced no tokens");
  return static_cast<double>(n_chr) / static_cast<double>(n_sub);
}

double mean_step_entropy(std::span<const double> step_entropy) {
  if (step_entropy.empty()) return 0.0;
  double sum = 0.0;
  for (double h : step_entropy) sum += h;
  return sum / static_cast<double>(step_entropy.size());
}

double probe_bad_words(const nnet::ModelParams<float>& params, const Vocab& vocab, SegmentMode mode,
                       std::span<const int> prime, const Lexicon& lexicon, int length) {
  sampler::GenerationConfig cfg;
  cfg.length = length;
  cfg.temperature = kProbeTemperature;
  cfg.rng_seed = kProbeSeed;
  const auto gen = sampler::generate_from(params, vocab, mode, prime, cfg);
  return bad_words_ratio(gen.tokens, lexicon, mode);
}

void MetricsReport::validate() const {
  auto fraction = [](double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) throw std::logic_error(std::string(what) + " outside [0, 1]");
  };
  for (double v : bad_words_series) fraction(v, "bad-words ratio");
  fraction(alexandrine_rate, "alexandrine rate");
}

std::string MetricsReport::to_key_values() const {
  std::ostringstream out;
  out << "#sylaba-metrics 1\n";
  out << "label=" << label << '\n';
  out << "initial_loss=" << format_real(initial_loss) << '\n';
  out << "final_loss=" << (loss_series.empty() ? std::string("nan") : format_real(loss_series.back())) << '\n';
  out << "loss_series=" << join_series(loss_series) << '\n';
  out << "bad_words_series=" << join_series(bad_words_series) << '\n';
  int lines = 0;
  for (const auto& [syl, n] : metre_histogram) {
    out << "metre." << syl << '=' << n << '\n';
    lines += n;
  }
  out << "metre_lines=" << lines << '\n';
  out << "alexandrine_rate=" << format_real(alexandrine_rate) << '\n';
  out << "compression_ratio=" << format_real(compression_ratio) << '\n';
  for (const auto& [t, h] : entropy_by_temperature) out << "entropy.T" << format_real(t) << '=' << format_real(h) << '\n';
  return out.str();
}

std::string MetricsReport::to_text() const {
  std::ostringstream out;
  out << "== metrics: " << label << " ==\n";
  out << "initial loss:      " << format_real(initial_loss) << '\n';
  out << "epochs:            " << loss_series.size() << '\n';
  if (!loss_series.empty()) out << "final loss:        " << format_real(loss_series.back()) << '\n';
  if (!bad_words_series.empty()) {
    out << "bad words (first): " << format_real(bad_words_series.front()) << '\n';
    out << "bad words (last):  " << format_real(bad_words_series.back()) << '\n';
  }
  out << "alexandrine rate:  " << format_real(alexandrine_rate) << '\n';
  out << "compression ratio: " << format_real(compression_ratio) << '\n';
  out << "metre histogram:\n";
  for (const auto& [syl, n] : metre_histogram) out << "  " << syl << '\t' << n << '\n';
  out << "mean step entropy by temperature:\n";
  for (const auto& [t, h] : entropy_by_temperature) out << "  T=" << format_real(t) << '\t' << format_real(h) << '\n';
  out << '\n' << to_key_values();
  return out.str();
}

std::string series_tsv(std::span<const double> values, int first_epoch) {
  std::string out = "epoch\tvalue\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%d\t%.9g\n", first_epoch + static_cast<int>(i), values[i]);
    out += buf;
  }
  return out;
}

}  // namespace sylaba::metrics
