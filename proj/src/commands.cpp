#include "sylaba/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "sylaba/checkpoint.hpp"
#include "sylaba/corpus.hpp"
#include "sylaba/metrics.hpp"
#include "sylaba/sampler.hpp"
#include "sylaba/segmenter.hpp"
#include "sylaba/train.hpp"

namespace sylaba::cli {

namespace fs = std::filesystem;

namespace {

constexpr const char* kCommands[] = {"tokenize", "detokenize", "train", "generate", "eval", "compare",
                                     "inspect-checkpoint"};
constexpr double kSweep[] = {0.2, 0.8, 1.4};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw InputError("failed writing '" + path.string() + "'");
}

void emit(const std::string& out_path, std::string_view content, std::ostream& out) {
  if (out_path.empty()) {
    out << content;
  } else {
    write_file(out_path, content);
  }
}

std::string fmt(double v, int precision = 4) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  return buf;
}

std::string temperature_tag(double t) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "T%.1f", t);
  return buf;
}

// Options shared by every subcommand.
struct Common {
  std::uint64_t seed = 1;
  std::string config;
  std::string mode = "subword";
  std::string out;
};

void add_common(CLI::App* cmd, Common& c, bool with_mode = true) {
  cmd->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  cmd->add_option("--config", c.config, "key=value file; command-line flags override it");
  if (with_mode) {
    cmd->add_option("--mode", c.mode, "Segmentation mode")
        ->check(CLI::IsMember({"subword", "char"}))
        ->capture_default_str();
  }
  cmd->add_option("--out", c.out, "Output path (default: standard output)");
}

struct TrainArgs {
  std::string corpus;
  std::optional<int> epochs;
  std::optional<int> hidden;
  std::optional<int> layers;
  double lr = 2e-3;
  double clip = 5.0;
  std::size_t chunk_len = kDefaultChunkLength;
  double scale = 1.0;
  int probe_length = metrics::kProbeLength;
  bool no_probe = false;
};

void add_train_options(CLI::App* cmd, TrainArgs& t) {
  cmd->add_option("--epochs", t.epochs, "Epochs (default 15 subword, 50 char)");
  cmd->add_option("--hidden", t.hidden, "Hidden size (default 500 subword, 400 char)");
  cmd->add_option("--layers", t.layers, "GRU layers (default 3 subword, 2 char)");
  cmd->add_option("--lr", t.lr, "Adam learning rate")->capture_default_str();
  cmd->add_option("--clip", t.clip, "Gradient norm clip")->capture_default_str();
  cmd->add_option("--chunk-len", t.chunk_len, "Chunk length in tokens")->capture_default_str();
  cmd->add_option("--scale", t.scale, "Multiply epochs and hidden size")->capture_default_str();
  cmd->add_option("--probe-length", t.probe_length, "Tokens generated for the per-epoch bad-words probe")
      ->capture_default_str();
  cmd->add_flag("--no-probe", t.no_probe, "Skip the per-epoch bad-words probe");
}

nnet::ModelConfig model_config(SegmentMode mode, const TrainArgs& t, std::uint64_t seed) {
  nnet::ModelConfig cfg;
  const bool sub = mode == SegmentMode::SubWord;
  cfg.epochs = t.epochs.value_or(sub ? 15 : 50);
  cfg.hidden_size = t.hidden.value_or(sub ? 500 : 400);
  cfg.n_layers = t.layers.value_or(sub ? 3 : 2);
  if (!(t.scale > 0.0)) throw InputError("--scale must be > 0");
  if (t.scale != 1.0) {
    cfg.epochs = std::max(1, static_cast<int>(std::lround(cfg.epochs * t.scale)));
    cfg.hidden_size = std::max(1, static_cast<int>(std::lround(cfg.hidden_size * t.scale)));
  }
  cfg.learning_rate = t.lr;
  cfg.grad_clip = t.clip;
  cfg.seed = seed;
  return cfg;
}

struct TrainedModel {
  nnet::LanguageModel model;
  nnet::TrainReport report;
  metrics::Lexicon lexicon;
  std::string corpus_text;
};

TrainedModel train_model(const std::string& corpus_path, SegmentMode mode, const TrainArgs& t, std::uint64_t seed,
                         const std::string& label, std::ostream& err) {
  TrainedModel tm;
  tm.corpus_text = normalize(read_file(corpus_path));
  const auto seg = SegmenterConfig::defaults(mode);
  const auto tokens = tokenize(tm.corpus_text, seg);
  if (tokens.empty()) throw InputError("corpus '" + corpus_path + "' is empty");
  if (t.chunk_len < 2) throw InputError("--chunk-len must be >= 2");
  if (tokens.size() < t.chunk_len) {
    throw InputError("corpus has " + std::to_string(tokens.size()) + " tokens, fewer than one chunk of " +
                     std::to_string(t.chunk_len) + "; use --chunk-len " + std::to_string(tokens.size()) +
                     " or less");
  }
  Vocab vocab = build_vocab(tokens);
  const auto indices = vocab.encode(tokens);
  const auto chunks = chunk(indices, t.chunk_len);

  auto cfg = model_config(mode, t, seed);
  cfg.vocab_size = vocab.size();
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }

  tm.lexicon = metrics::build_lexicon(tokens, mode);
  const auto prime = vocab.encode(tokenize(normalize(sampler::kDefaultPrime), seg));
  nnet::TrainOptions options;
  if (!t.no_probe) {
    if (t.probe_length < 1) throw InputError("--probe-length must be >= 1");
    options.epoch_probe = [&](int, const nnet::ModelParams<float>& params) {
      return metrics::probe_bad_words(params, vocab, mode, prime, tm.lexicon, t.probe_length);
    };
  }
  err << "[" << label << "] " << tokens.size() << " tokens, vocab " << vocab.size() << ", " << chunks.size()
      << " chunks of " << t.chunk_len << "; hidden " << cfg.hidden_size << ", layers " << cfg.n_layers
      << ", epochs " << cfg.epochs << '\n';
  double elapsed = 0.0;
  options.on_epoch_end = [&](int epoch, const nnet::TrainReport& r) {
    elapsed += r.epoch_seconds.back();
    err << "[" << label << "] epoch " << epoch << "/" << cfg.epochs << " loss " << fmt(r.epoch_loss.back());
    if (!r.bad_words.empty()) err << " bad-words " << fmt(r.bad_words.back());
    err << " (" << fmt(r.epoch_seconds.back(), 1) << " s, total " << fmt(elapsed, 1) << " s)\n";
  };
  auto result = nnet::train(chunks, cfg, options);
  err << "[" << label << "] initial loss " << fmt(result.report.initial_loss) << '\n';
  tm.model = nnet::LanguageModel{cfg, seg, std::move(vocab), std::move(result.params)};
  tm.report = std::move(result.report);
  return tm;
}

std::vector<double> with_initial(const nnet::TrainReport& r) {
  std::vector<double> v{r.initial_loss};
  v.insert(v.end(), r.epoch_loss.begin(), r.epoch_loss.end());
  return v;
}

void write_train_outputs(const TrainedModel& tm, const fs::path& checkpoint) {
  nnet::save_checkpoint(tm.model, checkpoint);
  write_file(fs::path(checkpoint.string() + ".loss.tsv"), metrics::series_tsv(with_initial(tm.report), 0));
  if (!tm.report.bad_words.empty()) {
    write_file(fs::path(checkpoint.string() + ".badwords.tsv"), metrics::series_tsv(tm.report.bad_words, 1));
  }
}

struct Samples {
  std::map<double, sampler::Generation> by_temperature;
};

Samples temperature_sweep(const nnet::LanguageModel& model, const std::string& prime, int length,
                          std::uint64_t seed) {
  Samples s;
  for (double t : kSweep) {
    sampler::GenerationConfig g;
    g.prime_text = prime;
    g.length = length;
    g.temperature = t;
    g.rng_seed = seed;
    s.by_temperature.emplace(t, sampler::generate(model, g));
  }
  return s;
}

// Metre statistics skip the prime's line so only generated lines count.
std::string generated_lines(const std::string& text) {
  const auto nl = text.find('\n');
  return nl == std::string::npos ? std::string() : text.substr(nl + 1);
}

metrics::MetricsReport build_report(const std::string& label, const TrainedModel& tm, const Samples& samples) {
  metrics::MetricsReport r;
  r.label = label;
  r.initial_loss = tm.report.initial_loss;
  r.loss_series = tm.report.epoch_loss;
  r.bad_words_series = tm.report.bad_words;
  const auto metre = metrics::metre_stats(generated_lines(samples.by_temperature.at(0.8).text));
  r.metre_histogram = metre.histogram;
  r.alexandrine_rate = metre.alexandrine_rate;
  r.compression_ratio = metrics::compression_ratio(tm.corpus_text, tm.model.segmenter);
  for (const auto& [t, gen] : samples.by_temperature) {
    r.entropy_by_temperature[t] = metrics::mean_step_entropy(gen.step_entropy);
  }
  r.validate();
  return r;
}

// --- subcommands -----------------------------------------------------------

int cmd_tokenize(const std::string& input, const Common& c, std::ostream& out) {
  const auto cfg = SegmenterConfig::defaults(parse_segment_mode(c.mode));
  const auto tokens = tokenize(normalize(read_file(input)), cfg);
  emit(c.out, serialize_tokens(tokens) + "\n", out);
  return kExitOk;
}

int cmd_detokenize(const std::string& input, const Common& c, std::ostream& out) {
  const auto tokens = parse_tokens(read_file(input));
  emit(c.out, detokenize(tokens, parse_segment_mode(c.mode)), out);
  return kExitOk;
}

int cmd_train(const TrainArgs& t, const Common& c, std::ostream& out, std::ostream& err) {
  if (c.out.empty()) throw InputError("train needs --out <checkpoint path>");
  const auto mode = parse_segment_mode(c.mode);
  const auto tm = train_model(t.corpus, mode, t, c.seed, std::string(to_string(mode)), err);
  write_train_outputs(tm, c.out);
  out << "checkpoint " << c.out << '\n';
  out << "loss series " << c.out << ".loss.tsv\n";
  if (!tm.report.bad_words.empty()) out << "bad-words series " << c.out << ".badwords.tsv\n";
  out << "final loss " << fmt(tm.report.epoch_loss.empty() ? tm.report.initial_loss : tm.report.epoch_loss.back())
      << '\n';
  return kExitOk;
}

struct GenerateArgs {
  std::string checkpoint;
  std::string prime = std::string(sampler::kDefaultPrime);
  int length = 400;
  double temperature = 0.8;
  bool argmax = false;
  std::string tokens_out;
};

int cmd_generate(const GenerateArgs& g, const Common& c, std::ostream& out) {
  const auto model = nnet::load_checkpoint(g.checkpoint);
  sampler::GenerationConfig cfg;
  cfg.prime_text = g.prime;
  cfg.length = g.length;
  cfg.temperature = g.temperature;
  cfg.rng_seed = c.seed;
  cfg.mode = g.argmax ? sampler::DecodeMode::Argmax : sampler::DecodeMode::Sample;
  const auto gen = sampler::generate(model, cfg);
  std::string text = gen.text;
  if (text.empty() || text.back() != '\n') text += '\n';
  emit(c.out, text, out);
  if (!g.tokens_out.empty()) write_file(g.tokens_out, serialize_tokens(gen.tokens) + "\n");
  return kExitOk;
}

struct EvalArgs {
  std::string checkpoint;
  std::string corpus;
  std::string prime = std::string(sampler::kDefaultPrime);
  int length = 400;
};

int cmd_eval(const EvalArgs& e, const Common& c, std::ostream& out) {
  const auto model = nnet::load_checkpoint(e.checkpoint);
  const auto mode = model.segmenter.mode;
  std::ostringstream report;
  metrics::MetricsReport r;
  r.label = std::string(to_string(mode));
  const auto samples = temperature_sweep(model, e.prime, e.length, c.seed);
  const auto& mid = samples.by_temperature.at(0.8);
  const auto metre = metrics::metre_stats(generated_lines(mid.text));
  r.metre_histogram = metre.histogram;
  r.alexandrine_rate = metre.alexandrine_rate;
  for (const auto& [t, gen] : samples.by_temperature) {
    r.entropy_by_temperature[t] = metrics::mean_step_entropy(gen.step_entropy);
  }
  if (!e.corpus.empty()) {
    const std::string text = normalize(read_file(e.corpus));
    const auto tokens = tokenize(text, model.segmenter);
    const auto lexicon = metrics::build_lexicon(tokens, mode);
    r.bad_words_series.push_back(metrics::bad_words_ratio(mid.tokens, lexicon, mode));
    r.compression_ratio = metrics::compression_ratio(text, model.segmenter);
    const auto indices = model.vocab.encode(tokens);
    const std::size_t len = std::min<std::size_t>(kDefaultChunkLength, indices.size());
    if (len >= 2) {
      const auto chunks = chunk(indices, len);
      const auto zero = nnet::HiddenState<float>::zeros(model.params.shape());
      double total = 0.0;
      for (const auto& ch : chunks) total += nnet::chunk_loss(model.params, ch, zero);
      r.loss_series.push_back(total / static_cast<double>(chunks.size()));
    }
  }
  r.validate();
  report << r.to_text();
  for (const auto& [t, gen] : samples.by_temperature) {
    report << "\n== sample " << temperature_tag(t) << " ==\n" << gen.text << '\n';
  }
  emit(c.out, report.str(), out);
  return kExitOk;
}

struct CompareArgs {
  TrainArgs train;
  std::string prime = std::string(sampler::kDefaultPrime);
  int length = 400;
};

std::string side_by_side(const metrics::MetricsReport& a, const metrics::MetricsReport& b) {
  auto last = [](const std::vector<double>& v) { return v.empty() ? std::string("-") : fmt(v.back()); };
  auto first = [](const std::vector<double>& v) { return v.empty() ? std::string("-") : fmt(v.front()); };
  std::ostringstream s;
  s << std::left << std::setw(24) << "" << std::setw(14) << a.label << b.label << '\n';
  auto row = [&](const std::string& name, const std::string& x, const std::string& y) {
    s << std::left << std::setw(24) << name << std::setw(14) << x << y << '\n';
  };
  row("epochs", std::to_string(a.loss_series.size()), std::to_string(b.loss_series.size()));
  row("initial loss", fmt(a.initial_loss), fmt(b.initial_loss));
  row("final loss", last(a.loss_series), last(b.loss_series));
  row("bad words (epoch 1)", first(a.bad_words_series), first(b.bad_words_series));
  row("bad words (final)", last(a.bad_words_series), last(b.bad_words_series));
  row("alexandrine rate", fmt(a.alexandrine_rate), fmt(b.alexandrine_rate));
  for (double t : kSweep) {
    row("entropy " + temperature_tag(t), fmt(a.entropy_by_temperature.at(t)), fmt(b.entropy_by_temperature.at(t)));
  }
  return s.str();
}

int cmd_compare(const CompareArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  if (c.out.empty()) throw InputError("compare needs --out <directory>");
  const fs::path dir(c.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError("cannot create '" + dir.string() + "': " + ec.message());

  std::ostringstream report;
  report << "#sylaba-compare 1\n";
  report << "corpus: " << fs::path(a.train.corpus).filename().string() << '\n';
  report << "scale: " << a.train.scale << '\n';
  report << "chunk length: " << a.train.chunk_len << '\n';
  report << "seed: " << c.seed << "\n\n";

  std::vector<metrics::MetricsReport> reports;
  std::vector<Samples> all_samples;
  for (SegmentMode mode : {SegmentMode::SubWord, SegmentMode::Char}) {
    const std::string label(to_string(mode));
    const auto started = std::chrono::steady_clock::now();
    const auto tm = train_model(a.train.corpus, mode, a.train, c.seed, label, err);
    write_train_outputs(tm, dir / (label + ".ckpt"));
    auto samples = temperature_sweep(tm.model, a.prime, a.length, c.seed);
    for (const auto& [t, gen] : samples.by_temperature) {
      write_file(dir / (label + "." + temperature_tag(t) + ".txt"), gen.text + "\n");
    }
    reports.push_back(build_report(label, tm, samples));
    all_samples.push_back(std::move(samples));
    err << "[" << label << "] done in "
        << fmt(std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count(), 1) << " s\n";
  }

  const auto& sub = reports[0];
  const auto& chr = reports[1];
  report << side_by_side(sub, chr) << '\n';
  const double sub_bad = sub.bad_words_series.empty() ? NAN : sub.bad_words_series.back();
  const double chr_bad = chr.bad_words_series.empty() ? NAN : chr.bad_words_series.back();
  report << "observation: final bad-words ratio " << fmt(sub_bad) << " (subword) vs " << fmt(chr_bad)
         << " (char); alexandrine rate " << fmt(sub.alexandrine_rate) << " vs " << fmt(chr.alexandrine_rate)
         << ". ";
  if (std::isnan(sub_bad) || std::isnan(chr_bad)) {
    report << "Bad-words probe disabled; no ranking.\n\n";
  } else if (sub_bad < chr_bad) {
    report << "The subword model produced fewer unattested words at this scale.\n\n";
  } else {
    report << "The subword model did not produce fewer unattested words at this scale.\n\n";
  }
  for (const auto& r : reports) report << r.to_text() << '\n';
  for (std::size_t i = 0; i < reports.size(); ++i) {
    for (const auto& [t, gen] : all_samples[i].by_temperature) {
      report << "== sample " << reports[i].label << " " << temperature_tag(t) << " ==\n" << gen.text << "\n\n";
    }
  }
  write_file(dir / "report.txt", report.str());
  out << "report " << (dir / "report.txt").string() << '\n';
  return kExitOk;
}

int cmd_inspect(const std::string& checkpoint, const Common& c, std::ostream& out) {
  const auto m = nnet::load_checkpoint(checkpoint);
  std::ostringstream s;
  s << "format version: " << nnet::kCheckpointVersion << '\n';
  s << "mode: " << to_string(m.segmenter.mode) << '\n';
  s << "vocab size: " << m.config.vocab_size << '\n';
  s << "hidden size: " << m.config.hidden_size << '\n';
  s << "layers: " << m.config.n_layers << '\n';
  s << "epochs: " << m.config.epochs << '\n';
  s << "seed: " << m.config.seed << '\n';
  s << "learning rate: " << m.config.learning_rate << '\n';
  s << "grad clip: " << m.config.grad_clip << '\n';
  s << "parameters: " << m.params.values().size() << '\n';
  s << "prefixes: " << m.segmenter.prefix_list.size() << '\n';
  s << "legal onsets: " << m.segmenter.legal_onsets.size() << '\n';
  s << "min core vowels: " << m.segmenter.min_core_vowels << '\n';
  emit(c.out, s.str(), out);
  return kExitOk;
}

}  // namespace

std::map<std::string, std::string> parse_config_text(std::string_view text) {
  std::map<std::string, std::string> values;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InputError("config line " + std::to_string(number) + ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw InputError("config line " + std::to_string(number) + ": empty key");
    if (key == "config") throw InputError("config line " + std::to_string(number) + ": nested config");
    values[key] = trim(line.substr(eq + 1));
  }
  return values;
}

std::vector<std::string> expand_config(std::span<const std::string> args) {
  std::vector<std::string> result(args.begin(), args.end());
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw InputError("--config needs a file");
      path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    }
  }
  if (path.empty()) return result;
  const auto values = parse_config_text(read_file(path));
  auto pos = std::find_if(result.begin(), result.end(), [](const std::string& a) {
    return std::find(std::begin(kCommands), std::end(kCommands), a) != std::end(kCommands);
  });
  if (pos == result.end()) return result;
  std::vector<std::string> injected;
  for (const auto& [k, v] : values) injected.push_back("--" + k + "=" + v);
  result.insert(pos + 1, injected.begin(), injected.end());
  return result;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polish sub-word segmentation and GRU verse generation"};
  app.name("sylaba");
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  Common common;
  std::string input;

  auto* tok = app.add_subcommand("tokenize", "Text file to token stream");
  tok->add_option("input", input, "UTF-8 text file")->required();
  add_common(tok, common);

  auto* detok = app.add_subcommand("detokenize", "Token stream to text");
  detok->add_option("input", input, "Token-stream file")->required();
  add_common(detok, common);

  TrainArgs train_args;
  auto* trn = app.add_subcommand("train", "Train a model on a corpus");
  trn->add_option("corpus", train_args.corpus, "UTF-8 corpus file")->required();
  add_common(trn, common);
  add_train_options(trn, train_args);

  GenerateArgs gen_args;
  auto* gen = app.add_subcommand("generate", "Generate text from a checkpoint");
  gen->add_option("checkpoint", gen_args.checkpoint, "Checkpoint file")->required();
  add_common(gen, common, false);
  gen->add_option("--prime", gen_args.prime, "Priming text")->capture_default_str();
  gen->add_option("--length", gen_args.length, "Tokens to generate")->capture_default_str();
  gen->add_option("--temperature,-T", gen_args.temperature, "Sampling temperature")->capture_default_str();
  gen->add_flag("--argmax", gen_args.argmax, "Greedy decoding instead of sampling");
  gen->add_option("--tokens-out", gen_args.tokens_out, "Also write the generated token stream");

  EvalArgs eval_args;
  auto* ev = app.add_subcommand("eval", "Metrics report for a checkpoint");
  ev->add_option("checkpoint", eval_args.checkpoint, "Checkpoint file")->required();
  add_common(ev, common, false);
  ev->add_option("--corpus", eval_args.corpus, "Training corpus (lexicon, loss, compression)");
  ev->add_option("--prime", eval_args.prime, "Priming text")->capture_default_str();
  ev->add_option("--length", eval_args.length, "Tokens per sample")->capture_default_str();

  CompareArgs cmp_args;
  auto* cmp = app.add_subcommand("compare", "Train subword and char models and compare them");
  cmp->add_option("corpus", cmp_args.train.corpus, "UTF-8 corpus file")->required();
  add_common(cmp, common, false);
  add_train_options(cmp, cmp_args.train);
  cmp->add_option("--prime", cmp_args.prime, "Priming text")->capture_default_str();
  cmp->add_option("--length", cmp_args.length, "Tokens per sample")->capture_default_str();

  auto* insp = app.add_subcommand("inspect-checkpoint", "Print checkpoint metadata");
  insp->add_option("checkpoint", input, "Checkpoint file")->required();
  add_common(insp, common, false);

  try {
    auto expanded = expand_config(args);
    std::reverse(expanded.begin(), expanded.end());
    app.parse(std::move(expanded));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const InputError& e) {
    err << "sylaba: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (tok->parsed()) return cmd_tokenize(input, common, out);
    if (detok->parsed()) return cmd_detokenize(input, common, out);
    if (trn->parsed()) return cmd_train(train_args, common, out, err);
    if (gen->parsed()) return cmd_generate(gen_args, common, out);
    if (ev->parsed()) return cmd_eval(eval_args, common, out);
    if (cmp->parsed()) return cmd_compare(cmp_args, common, out, err);
    if (insp->parsed()) return cmd_inspect(input, common, out);
    err << "sylaba: no command\n";
    return kExitUsage;
  } catch (const InputError& e) {
    err << "sylaba: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nnet::CheckpointError& e) {
    err << "sylaba: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "sylaba: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "sylaba: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace sylaba::cli
