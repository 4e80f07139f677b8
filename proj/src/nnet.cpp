#include "sylaba/nnet.hpp"

#include <cmath>
#include <limits>

#include "sylaba/rng.hpp"

namespace sylaba::nnet {

void ModelConfig::validate() const {
  if (vocab_size < 1) throw std::invalid_argument("vocab_size must be >= 1");
  if (hidden_size < 1) throw std::invalid_argument("hidden_size must be >= 1");
  if (n_layers < 1) throw std::invalid_argument("n_layers must be >= 1");
  if (!(learning_rate > 0.0)) throw std::invalid_argument("learning_rate must be > 0");
  if (!(grad_clip > 0.0)) throw std::invalid_argument("grad_clip must be > 0");
  if (epochs < 0) throw std::invalid_argument("epochs must be >= 0");
}

std::size_t ModelShape::layer_size() const {
  const auto h = static_cast<std::size_t>(hidden_size);
  return 6 * h * h + 3 * h;
}

std::size_t ModelShape::parameter_count() const {
  const auto h = static_cast<std::size_t>(hidden_size);
  const auto v = static_cast<std::size_t>(vocab_size);
  return h * v + static_cast<std::size_t>(n_layers) * layer_size() + v * h + v;
}

template <typename S>
ModelParams<S>::ModelParams(ModelShape shape) : shape_(shape), values_(shape.parameter_count(), S(0)) {}

template <typename S>
std::size_t ModelParams<S>::layer_offset(int layer) const {
  return static_cast<std::size_t>(shape_.hidden_size) * static_cast<std::size_t>(shape_.vocab_size) +
         static_cast<std::size_t>(layer) * shape_.layer_size();
}

template <typename S>
std::size_t ModelParams<S>::decoder_offset() const {
  return layer_offset(shape_.n_layers);
}

template <typename S>
Eigen::Map<Matrix<S>> ModelParams<S>::encoder() {
  return {values_.data(), shape_.hidden_size, shape_.vocab_size};
}

template <typename S>
Eigen::Map<const Matrix<S>> ModelParams<S>::encoder() const {
  return {values_.data(), shape_.hidden_size, shape_.vocab_size};
}

template <typename S>
Eigen::Map<Matrix<S>> ModelParams<S>::input_weights(int layer) {
  const int h = shape_.hidden_size;
  return {values_.data() + layer_offset(layer), 3 * h, h};
}

template <typename S>
Eigen::Map<Matrix<S>> ModelParams<S>::recurrent_weights(int layer) {
  const int h = shape_.hidden_size;
  return {values_.data() + layer_offset(layer) + 3 * static_cast<std::size_t>(h) * h, 3 * h, h};
}

template <typename S>
Eigen::Map<Vector<S>> ModelParams<S>::bias(int layer) {
  const int h = shape_.hidden_size;
  return {values_.data() + layer_offset(layer) + 6 * static_cast<std::size_t>(h) * h, 3 * h};
}

template <typename S>
GruWeights<S> ModelParams<S>::layer(int layer) const {
  const int h = shape_.hidden_size;
  const S* base = values_.data() + layer_offset(layer);
  const auto block = 3 * static_cast<std::size_t>(h) * h;
  return {Eigen::Map<const Matrix<S>>(base, 3 * h, h), Eigen::Map<const Matrix<S>>(base + block, 3 * h, h),
          Eigen::Map<const Vector<S>>(base + 2 * block, 3 * h)};
}

template <typename S>
Eigen::Map<Matrix<S>> ModelParams<S>::decoder() {
  return {values_.data() + decoder_offset(), shape_.vocab_size, shape_.hidden_size};
}

template <typename S>
Eigen::Map<const Matrix<S>> ModelParams<S>::decoder() const {
  return {values_.data() + decoder_offset(), shape_.vocab_size, shape_.hidden_size};
}

template <typename S>
Eigen::Map<Vector<S>> ModelParams<S>::decoder_bias() {
  const auto off = decoder_offset() + static_cast<std::size_t>(shape_.vocab_size) * shape_.hidden_size;
  return {values_.data() + off, shape_.vocab_size};
}

template <typename S>
Eigen::Map<const Vector<S>> ModelParams<S>::decoder_bias() const {
  const auto off = decoder_offset() + static_cast<std::size_t>(shape_.vocab_size) * shape_.hidden_size;
  return {values_.data() + off, shape_.vocab_size};
}

template <typename S>
void ModelParams<S>::set_zero() {
  std::fill(values_.begin(), values_.end(), S(0));
}

template <typename S>
bool ModelParams<S>::all_finite() const {
  for (S v : values_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

template <typename S>
HiddenState<S> HiddenState<S>::zeros(const ModelShape& shape) {
  HiddenState state;
  state.layers.assign(static_cast<std::size_t>(shape.n_layers), Vector<S>::Zero(shape.hidden_size));
  return state;
}

template <typename S>
ModelParams<S> init_params(const ModelConfig& cfg) {
  cfg.validate();
  ModelParams<S> params({cfg.vocab_size, cfg.hidden_size, cfg.n_layers});
  Rng rng(cfg.seed);
  const double bound = 1.0 / std::sqrt(static_cast<double>(cfg.hidden_size));
  auto fill = [&](auto&& block) {
    for (Eigen::Index j = 0; j < block.cols(); ++j) {
      for (Eigen::Index i = 0; i < block.rows(); ++i) block(i, j) = static_cast<S>((2.0 * uniform01(rng) - 1.0) * bound);
    }
  };
  fill(params.encoder());
  for (int l = 0; l < cfg.n_layers; ++l) {
    fill(params.input_weights(l));
    fill(params.recurrent_weights(l));
  }
  fill(params.decoder());
  return params;
}

namespace {

template <typename Derived>
auto sigmoid(const Eigen::ArrayBase<Derived>& x) {
  using S = typename Derived::Scalar;
  return (S(1) + (-x).exp()).inverse();
}

void check_dims(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("dimension mismatch: ") + what);
}

// Per-layer activations kept for the backward pass.
template <typename S>
struct LayerTrace {
  Matrix<S> z, r, n, hn, out;  // H x T each; hn = U_n h + b_n
};

template <typename S>
struct ForwardTrace {
  Matrix<S> embedded;  // H x T
  std::vector<LayerTrace<S>> layers;
  Matrix<S> logits;  // V x T
};

template <typename S>
void check_chunk(const ModelParams<S>& params, const ChunkPair& chunk) {
  if (chunk.input.empty()) throw std::invalid_argument("chunk has no positions");
  if (chunk.input.size() != chunk.target.size()) throw std::invalid_argument("chunk input/target length differ");
  const int v = params.shape().vocab_size;
  for (std::size_t t = 0; t < chunk.input.size(); ++t) {
    if (chunk.input[t] < 0 || chunk.input[t] >= v || chunk.target[t] < 0 || chunk.target[t] >= v) {
      throw std::out_of_range("chunk token index outside vocabulary");
    }
  }
}

template <typename S>
ForwardTrace<S> forward_chunk(const ModelParams<S>& params, const ChunkPair& chunk, const HiddenState<S>& initial) {
  const auto& shape = params.shape();
  const int h = shape.hidden_size;
  const auto steps = static_cast<Eigen::Index>(chunk.input.size());
  check_dims(initial.layers.size() == static_cast<std::size_t>(shape.n_layers), "initial state layers");

  ForwardTrace<S> trace;
  trace.embedded.resize(h, steps);
  const auto enc = params.encoder();
  for (Eigen::Index t = 0; t < steps; ++t) trace.embedded.col(t) = enc.col(chunk.input[static_cast<std::size_t>(t)]);

  trace.layers.resize(static_cast<std::size_t>(shape.n_layers));
  const Matrix<S>* below = &trace.embedded;
  for (int l = 0; l < shape.n_layers; ++l) {
    const auto w = params.layer(l);
    auto& lt = trace.layers[static_cast<std::size_t>(l)];
    Matrix<S> gx = w.input * *below;
    gx.topRows(2 * h).colwise() += w.bias.head(2 * h);
    lt.z.resize(h, steps);
    lt.r.resize(h, steps);
    lt.n.resize(h, steps);
    lt.hn.resize(h, steps);
    lt.out.resize(h, steps);
    Vector<S> state = initial.layers[static_cast<std::size_t>(l)];
    check_dims(state.size() == h, "initial state width");
    Vector<S> gh(3 * h);
    for (Eigen::Index t = 0; t < steps; ++t) {
      gh.noalias() = w.recurrent * state;
      lt.z.col(t) = sigmoid((gx.col(t).head(h) + gh.head(h)).array()).matrix();
      lt.r.col(t) = sigmoid((gx.col(t).segment(h, h) + gh.segment(h, h)).array()).matrix();
      lt.hn.col(t) = gh.tail(h) + w.bias.tail(h);
      lt.n.col(t) = (gx.col(t).tail(h).array() + lt.r.col(t).array() * lt.hn.col(t).array()).tanh().matrix();
      state = ((S(1) - lt.z.col(t).array()) * lt.n.col(t).array() + lt.z.col(t).array() * state.array()).matrix();
      lt.out.col(t) = state;
    }
    below = &lt.out;
  }
  trace.logits = params.decoder() * *below;
  trace.logits.colwise() += params.decoder_bias();
  return trace;
}

}  // namespace

template <typename S>
Vector<S> gru_cell(const Vector<S>& x, const Vector<S>& h, const GruWeights<S>& w) {
  const auto hidden = h.size();
  check_dims(w.recurrent.rows() == 3 * hidden && w.recurrent.cols() == hidden, "recurrent weights vs state");
  check_dims(w.input.rows() == 3 * hidden && w.input.cols() == x.size(), "input weights vs input");
  check_dims(w.bias.size() == 3 * hidden, "bias");
  const Vector<S> gx = w.input * x;
  const Vector<S> gh = w.recurrent * h;
  const auto z = sigmoid((gx.head(hidden) + gh.head(hidden) + w.bias.head(hidden)).array());
  const auto r = sigmoid((gx.segment(hidden, hidden) + gh.segment(hidden, hidden) + w.bias.segment(hidden, hidden)).array());
  const Eigen::Array<S, Eigen::Dynamic, 1> n =
      (gx.tail(hidden).array() + r * (gh.tail(hidden) + w.bias.tail(hidden)).array()).tanh();
  const Eigen::Array<S, Eigen::Dynamic, 1> zz = z;
  return ((S(1) - zz) * n + zz * h.array()).matrix();
}

template <typename S>
Vector<S> forward_step(const ModelParams<S>& params, int token, HiddenState<S>& state) {
  const auto& shape = params.shape();
  if (token < 0 || token >= shape.vocab_size) throw std::out_of_range("token index outside vocabulary");
  check_dims(state.layers.size() == static_cast<std::size_t>(shape.n_layers), "state layers");
  Vector<S> x = params.encoder().col(token);
  for (int l = 0; l < shape.n_layers; ++l) {
    auto& h = state.layers[static_cast<std::size_t>(l)];
    h = gru_cell<S>(x, h, params.layer(l));
    x = h;
  }
  Vector<S> logits = params.decoder() * x + params.decoder_bias();
  return logits;
}

template <typename S>
double cross_entropy(std::span<const S> logits, int target) {
  if (target < 0 || static_cast<std::size_t>(target) >= logits.size()) {
    throw std::out_of_range("cross_entropy target outside logits");
  }
  double max = -std::numeric_limits<double>::infinity();
  for (S z : logits) max = std::max(max, static_cast<double>(z));
  double sum = 0.0;
  for (S z : logits) sum += std::exp(static_cast<double>(z) - max);
  return max + std::log(sum) - static_cast<double>(logits[static_cast<std::size_t>(target)]);
}

template <typename S>
double chunk_loss(const ModelParams<S>& params, const ChunkPair& chunk, const HiddenState<S>& initial) {
  check_chunk(params, chunk);
  const auto trace = forward_chunk(params, chunk, initial);
  double total = 0.0;
  for (Eigen::Index t = 0; t < trace.logits.cols(); ++t) {
    total += cross_entropy<S>(std::span<const S>(trace.logits.col(t).data(), static_cast<std::size_t>(trace.logits.rows())),
                              chunk.target[static_cast<std::size_t>(t)]);
  }
  const double loss = total / static_cast<double>(trace.logits.cols());
  if (!std::isfinite(loss)) throw NumericalError("non-finite loss in forward pass");
  return loss;
}

template <typename S>
BackwardStats backward(const ModelParams<S>& params, const ChunkPair& chunk, const HiddenState<S>& initial,
                       double grad_clip, ModelParams<S>& grads) {
  check_chunk(params, chunk);
  const auto& shape = params.shape();
  const int h = shape.hidden_size;
  auto trace = forward_chunk(params, chunk, initial);
  const auto steps = trace.logits.cols();

  if (!(grads.shape() == shape)) grads = ModelParams<S>(shape);
  grads.set_zero();

  // Softmax in place and loss.
  double total = 0.0;
  Matrix<S>& dlogits = trace.logits;
  for (Eigen::Index t = 0; t < steps; ++t) {
    auto col = dlogits.col(t);
    const int target = chunk.target[static_cast<std::size_t>(t)];
    const S max = col.maxCoeff();
    const S margin = col(target) - max;
    col.array() = (col.array() - max).exp();
    const S sum = col.sum();
    total += std::log(static_cast<double>(sum)) - static_cast<double>(margin);
    col /= sum;
    col(target) -= S(1);
  }
  const double loss = total / static_cast<double>(steps);
  if (!std::isfinite(loss)) throw NumericalError("non-finite loss in forward pass");
  dlogits /= static_cast<S>(steps);

  const Matrix<S>& top = shape.n_layers > 0 ? trace.layers.back().out : trace.embedded;
  grads.decoder().noalias() = dlogits * top.transpose();
  grads.decoder_bias() = dlogits.rowwise().sum();
  Matrix<S> dout = params.decoder().transpose() * dlogits;  // H x T

  for (int l = shape.n_layers - 1; l >= 0; --l) {
    const auto w = params.layer(l);
    const auto& lt = trace.layers[static_cast<std::size_t>(l)];
    const Matrix<S>& below = l > 0 ? trace.layers[static_cast<std::size_t>(l - 1)].out : trace.embedded;
    const Vector<S>& h0 = initial.layers[static_cast<std::size_t>(l)];

    Matrix<S> dgx(3 * h, steps);
    Matrix<S> dgh(3 * h, steps);
    Matrix<S> prev(h, steps);
    Vector<S> dh_next = Vector<S>::Zero(h);
    Vector<S> dh(h);
    for (Eigen::Index t = steps - 1; t >= 0; --t) {
      if (t > 0) {
        prev.col(t) = lt.out.col(t - 1);
      } else {
        prev.col(t) = h0;
      }
      dh = dout.col(t) + dh_next;
      const auto z = lt.z.col(t).array();
      const auto r = lt.r.col(t).array();
      const auto n = lt.n.col(t).array();
      const auto da_n = (dh.array() * (S(1) - z) * (S(1) - n * n)).eval();
      const auto da_z = (dh.array() * (prev.col(t).array() - n) * z * (S(1) - z)).eval();
      const auto da_r = (da_n * lt.hn.col(t).array() * r * (S(1) - r)).eval();
      dgx.col(t).head(h) = da_z.matrix();
      dgx.col(t).segment(h, h) = da_r.matrix();
      dgx.col(t).tail(h) = da_n.matrix();
      dgh.col(t).head(2 * h) = dgx.col(t).head(2 * h);
      dgh.col(t).tail(h) = (da_n * r).matrix();
      dh_next = (dh.array() * z).matrix();
      dh_next.noalias() += w.recurrent.transpose() * dgh.col(t);
    }
    grads.recurrent_weights(l).noalias() = dgh * prev.transpose();
    grads.input_weights(l).noalias() = dgx * below.transpose();
    auto gb = grads.bias(l);
    gb.head(2 * h) = dgx.topRows(2 * h).rowwise().sum();
    gb.tail(h) = dgh.bottomRows(h).rowwise().sum();
    dout = w.input.transpose() * dgx;
  }

  auto genc = grads.encoder();
  for (Eigen::Index t = 0; t < steps; ++t) genc.col(chunk.input[static_cast<std::size_t>(t)]) += dout.col(t);

  double sq = 0.0;
  for (S g : grads.values()) sq += static_cast<double>(g) * static_cast<double>(g);
  BackwardStats stats{loss, std::sqrt(sq), false};
  if (!std::isfinite(stats.grad_norm)) throw NumericalError("non-finite gradient norm");
  if (stats.grad_norm > grad_clip) {
    const auto scale = static_cast<S>(grad_clip / stats.grad_norm);
    for (S& g : grads.values()) g *= scale;
    stats.clipped = true;
  }
  return stats;
}

template <typename S>
void adam_step(ModelParams<S>& params, const ModelParams<S>& grads, AdamState<S>& state, double learning_rate) {
  const auto p = params.values();
  const auto g = grads.values();
  if (p.size() != g.size()) throw std::invalid_argument("adam_step: gradient shape mismatch");
  if (state.m.size() != p.size()) {
    state.m.assign(p.size(), S(0));
    state.v.assign(p.size(), S(0));
    state.step = 0;
  }
  ++state.step;
  const double c1 = 1.0 - std::pow(kAdamBeta1, static_cast<double>(state.step));
  const double c2 = 1.0 - std::pow(kAdamBeta2, static_cast<double>(state.step));
  const auto b1 = static_cast<S>(kAdamBeta1);
  const auto b2 = static_cast<S>(kAdamBeta2);
  const auto step = static_cast<S>(learning_rate / c1);
  const auto inv_c2 = static_cast<S>(1.0 / c2);
  const auto eps = static_cast<S>(kAdamEpsilon);
  for (std::size_t i = 0; i < p.size(); ++i) {
    state.m[i] = b1 * state.m[i] + (S(1) - b1) * g[i];
    state.v[i] = b2 * state.v[i] + (S(1) - b2) * g[i] * g[i];
    p[i] -= step * state.m[i] / (std::sqrt(state.v[i] * inv_c2) + eps);
  }
}

#define SYLABA_INSTANTIATE(S)                                                                             \
  template class ModelParams<S>;                                                                          \
  template struct HiddenState<S>;                                                                         \
  template ModelParams<S> init_params<S>(const ModelConfig&);                                             \
  template Vector<S> gru_cell<S>(const Vector<S>&, const Vector<S>&, const GruWeights<S>&);               \
  template Vector<S> forward_step<S>(const ModelParams<S>&, int, HiddenState<S>&);                        \
  template double cross_entropy<S>(std::span<const S>, int);                                              \
  template double chunk_loss<S>(const ModelParams<S>&, const ChunkPair&, const HiddenState<S>&);          \
  template BackwardStats backward<S>(const ModelParams<S>&, const ChunkPair&, const HiddenState<S>&, double, \
                                     ModelParams<S>&);                                                    \
  template void adam_step<S>(ModelParams<S>&, const ModelParams<S>&, AdamState<S>&, double);

SYLABA_INSTANTIATE(float)
SYLABA_INSTANTIATE(double)

#undef SYLABA_INSTANTIATE

}  // namespace sylaba::nnet
