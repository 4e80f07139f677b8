#pragma once

#include <functional>
#include <span>
#include <vector>

#include "sylaba/corpus.hpp"
#include "sylaba/nnet.hpp"

namespace sylaba::nnet {

struct TrainReport {
  // Mean chunk loss of the untrained model (the "epoch 0" point).
  double initial_loss = 0.0;
  std::vector<double> epoch_loss;
  // Filled only when TrainOptions::epoch_probe is set.
  std::vector<double> bad_words;
  std::vector<double> epoch_seconds;
};

struct TrainOptions {
  // Evaluated on the training thread after each epoch; its value is appended
  // to TrainReport::bad_words.
  std::function<double(int epoch, const ModelParams<float>& params)> epoch_probe;
  std::function<void(int epoch, const TrainReport& report)> on_epoch_end;
};

struct TrainResult {
  ModelParams<float> params;
  TrainReport report;
};

// One Adam step per chunk, chunks visited in a seed-determined order each
// epoch, hidden state zeroed at every chunk start. Deterministic per
// (chunks, cfg) on a given build.
TrainResult train(std::span<const ChunkPair> chunks, const ModelConfig& cfg, const TrainOptions& options = {});

}  // namespace sylaba::nnet
