#include "sylaba/train.hpp"

#include <chrono>
#include <numeric>

#include "sylaba/rng.hpp"

namespace sylaba::nnet {

namespace {
constexpr std::uint64_t kShuffleStream = 0x9E3779B97F4A7C15ULL;
}

TrainResult train(std::span<const ChunkPair> chunks, const ModelConfig& cfg, const TrainOptions& options) {
  cfg.validate();
  if (chunks.empty()) throw std::invalid_argument("training needs at least one chunk");

  TrainResult result{init_params<float>(cfg), {}};
  auto& params = result.params;
  auto& report = result.report;
  const auto zero = HiddenState<float>::zeros(params.shape());

  double initial = 0.0;
  for (const auto& c : chunks) initial += chunk_loss(params, c, zero);
  report.initial_loss = initial / static_cast<double>(chunks.size());

  Rng order_rng(cfg.seed ^ kShuffleStream);
  std::vector<std::size_t> order(chunks.size());
  AdamState<float> adam;
  ModelParams<float> grads(params.shape());

  for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
    const auto started = std::chrono::steady_clock::now();
    std::iota(order.begin(), order.end(), std::size_t{0});
    shuffle(std::span<std::size_t>(order), order_rng);
    double total = 0.0;
    for (std::size_t i : order) {
      total += backward(params, chunks[i], zero, cfg.grad_clip, grads).loss;
      adam_step(params, grads, adam, cfg.learning_rate);
    }
    if (!params.all_finite()) throw NumericalError("parameters became non-finite in epoch " + std::to_string(epoch));
    report.epoch_loss.push_back(total / static_cast<double>(chunks.size()));
    if (options.epoch_probe) report.bad_words.push_back(options.epoch_probe(epoch, params));
    report.epoch_seconds.push_back(
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count());
    if (options.on_epoch_end) options.on_epoch_end(epoch, report);
  }
  return result;
}

}  // namespace sylaba::nnet
