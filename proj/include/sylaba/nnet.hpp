#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "sylaba/corpus.hpp"

// Stacked-GRU language model: embedding lookup -> n GRU layers -> linear
// decoder over the vocabulary.
namespace sylaba::nnet {

struct ModelConfig {
  int vocab_size = 0;
  int hidden_size = 500;
  int n_layers = 3;
  std::uint64_t seed = 1;
  double learning_rate = 2e-3;
  double grad_clip = 5.0;
  int epochs = 15;

  // Throws std::invalid_argument.
  void validate() const;

  friend bool operator==(const ModelConfig&, const ModelConfig&) = default;
};

// Raised when a loss or gradient stops being finite.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ModelShape {
  int vocab_size = 0;
  int hidden_size = 0;
  int n_layers = 0;

  std::size_t layer_size() const;
  std::size_t parameter_count() const;
  friend bool operator==(const ModelShape&, const ModelShape&) = default;
};

template <typename S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <typename S>
struct GruWeights {
  Eigen::Map<const Matrix<S>> input;      // 3H x in, gate blocks [z; r; n]
  Eigen::Map<const Matrix<S>> recurrent;  // 3H x H
  Eigen::Map<const Vector<S>> bias;       // [b_z; b_r; b_n]
};

// All weights live in one contiguous buffer (column-major Eigen views):
//   encoder      H x V   column v is the embedding of token v
//   per layer    W (3H x H), U (3H x H), b (3H)
//   decoder      V x H
//   decoder bias V
template <typename S>
class ModelParams {
 public:
  ModelParams() = default;
  explicit ModelParams(ModelShape shape);

  const ModelShape& shape() const { return shape_; }
  std::span<S> values() { return values_; }
  std::span<const S> values() const { return values_; }

  Eigen::Map<Matrix<S>> encoder();
  Eigen::Map<const Matrix<S>> encoder() const;
  Eigen::Map<Matrix<S>> input_weights(int layer);
  Eigen::Map<Matrix<S>> recurrent_weights(int layer);
  Eigen::Map<Vector<S>> bias(int layer);
  GruWeights<S> layer(int layer) const;
  Eigen::Map<Matrix<S>> decoder();
  Eigen::Map<const Matrix<S>> decoder() const;
  Eigen::Map<Vector<S>> decoder_bias();
  Eigen::Map<const Vector<S>> decoder_bias() const;

  void set_zero();
  bool all_finite() const;

  // Element-wise conversion, e.g. float weights to double for checking.
  template <typename T>
  ModelParams<T> cast() const {
    ModelParams<T> out(shape_);
    for (std::size_t i = 0; i < values_.size(); ++i) out.values()[i] = static_cast<T>(values_[i]);
    return out;
  }

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

 private:
  std::size_t layer_offset(int layer) const;
  std::size_t decoder_offset() const;

  ModelShape shape_;
  std::vector<S, Eigen::aligned_allocator<S>> values_;
};

template <typename S>
struct HiddenState {
  std::vector<Vector<S>> layers;

  static HiddenState zeros(const ModelShape& shape);
};

// Uniform in [-1/sqrt(H), 1/sqrt(H)] for weights, zero biases.
template <typename S = float>
ModelParams<S> init_params(const ModelConfig& cfg);

// z = sigmoid(W_z x + U_z h + b_z); r = sigmoid(W_r x + U_r h + b_r);
// n = tanh(W_n x + r * (U_n h + b_n)); h' = (1 - z) * n + z * h.
template <typename S>
Vector<S> gru_cell(const Vector<S>& x, const Vector<S>& h, const GruWeights<S>& weights);

// Feeds one token; updates `state` in place and returns the logits.
template <typename S>
Vector<S> forward_step(const ModelParams<S>& params, int token, HiddenState<S>& state);

// -log softmax(logits)[target], via log-sum-exp.
template <typename S>
double cross_entropy(std::span<const S> logits, int target);

struct BackwardStats {
  double loss = 0.0;       // mean cross-entropy over the chunk
  double grad_norm = 0.0;  // global L2 norm before clipping
  bool clipped = false;
};

// Full BPTT over the chunk. `grads` is resized and overwritten; the global
// gradient norm is clipped to `grad_clip`.
template <typename S>
BackwardStats backward(const ModelParams<S>& params, const ChunkPair& chunk, const HiddenState<S>& initial,
                       double grad_clip, ModelParams<S>& grads);

// Mean cross-entropy of a chunk (forward pass only).
template <typename S>
double chunk_loss(const ModelParams<S>& params, const ChunkPair& chunk, const HiddenState<S>& initial);

template <typename S>
struct AdamState {
  std::vector<S> m;
  std::vector<S> v;
  std::int64_t step = 0;
};

inline constexpr double kAdamBeta1 = 0.9;
inline constexpr double kAdamBeta2 = 0.999;
inline constexpr double kAdamEpsilon = 1e-8;

template <typename S>
void adam_step(ModelParams<S>& params, const ModelParams<S>& grads, AdamState<S>& state, double learning_rate);

}  // namespace sylaba::nnet
