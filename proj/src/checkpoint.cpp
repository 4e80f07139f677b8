#include "sylaba/checkpoint.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

#include <zlib.h>

namespace sylaba::nnet {

namespace {

class Writer {
 public:
  void u8(std::uint8_t v) { bytes_.push_back(v); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) bytes_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) bytes_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void f32(float v) { u32(std::bit_cast<std::uint32_t>(v)); }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
  void str(const std::string& s) {
    u32(static_cast<std::uint32_t>(s.size()));
    bytes_.insert(bytes_.end(), s.begin(), s.end());
  }
  void raw(const char* data, std::size_t n) { bytes_.insert(bytes_.end(), data, data + n); }
  std::vector<std::uint8_t>& bytes() { return bytes_; }

 private:
  std::vector<std::uint8_t> bytes_;
};

class Reader {
 public:
  Reader(const std::uint8_t* data, std::size_t size) : data_(data), size_(size) {}

  std::uint8_t u8() { return *take(1); }
  std::uint32_t u32() {
    const auto* p = take(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(p[i]) << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    const auto* p = take(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    return v;
  }
  float f32() { return std::bit_cast<float>(u32()); }
  double f64() { return std::bit_cast<double>(u64()); }
  std::string str() {
    const auto n = u32();
    const auto* p = take(n);
    return std::string(reinterpret_cast<const char*>(p), n);
  }
  std::size_t remaining() const { return size_ - pos_; }

 private:
  const std::uint8_t* take(std::size_t n) {
    if (n > size_ - pos_) throw CheckpointFormatError("checkpoint structure overruns its payload");
    const auto* p = data_ + pos_;
    pos_ += n;
    return p;
  }

  const std::uint8_t* data_;
  std::size_t size_;
  std::size_t pos_ = 0;
};

std::uint32_t crc32_of(const std::uint8_t* data, std::size_t n) {
  uLong crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, data, static_cast<uInt>(n));
  return static_cast<std::uint32_t>(crc);
}

constexpr std::size_t kHeaderSize = sizeof(kCheckpointMagic) + 4 + 8;

void write_strings(Writer& w, const auto& strings) {
  w.u32(static_cast<std::uint32_t>(std::size(strings)));
  for (const auto& s : strings) w.str(s);
}

std::vector<std::string> read_strings(Reader& r) {
  const auto n = r.u32();
  std::vector<std::string> out;
  for (std::uint32_t i = 0; i < n; ++i) out.push_back(r.str());
  return out;
}

}  // namespace

std::vector<std::uint8_t> encode_checkpoint(const LanguageModel& model) {
  model.config.validate();
  if (model.config.vocab_size != model.vocab.size()) {
    throw CheckpointFormatError("model vocab_size does not match the vocabulary");
  }
  const ModelShape shape{model.config.vocab_size, model.config.hidden_size, model.config.n_layers};
  if (!(model.params.shape() == shape)) throw CheckpointFormatError("parameter shape does not match the config");

  Writer w;
  w.raw(kCheckpointMagic, sizeof(kCheckpointMagic));
  w.u32(kCheckpointVersion);
  w.u64(0);  // total length, patched below
  const auto& c = model.config;
  w.u32(static_cast<std::uint32_t>(c.vocab_size));
  w.u32(static_cast<std::uint32_t>(c.hidden_size));
  w.u32(static_cast<std::uint32_t>(c.n_layers));
  w.u64(c.seed);
  w.f64(c.learning_rate);
  w.f64(c.grad_clip);
  w.u32(static_cast<std::uint32_t>(c.epochs));
  w.u8(static_cast<std::uint8_t>(model.segmenter.mode));
  w.u32(static_cast<std::uint32_t>(model.segmenter.min_core_vowels));
  write_strings(w, model.segmenter.prefix_list);
  write_strings(w, model.segmenter.legal_onsets);
  write_strings(w, model.vocab.entries());
  const auto values = model.params.values();
  w.u64(values.size());
  for (float v : values) w.f32(v);

  auto& bytes = w.bytes();
  const std::uint64_t total = bytes.size() + 4;
  for (int i = 0; i < 8; ++i) bytes[sizeof(kCheckpointMagic) + 4 + i] = static_cast<std::uint8_t>(total >> (8 * i));
  const auto crc = crc32_of(bytes.data(), bytes.size());
  w.u32(crc);
  return std::move(bytes);
}

LanguageModel decode_checkpoint(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < kHeaderSize) throw CheckpointTruncatedError("checkpoint is truncated (incomplete header)");
  if (std::memcmp(bytes.data(), kCheckpointMagic, sizeof(kCheckpointMagic)) != 0) {
    throw CheckpointFormatError("not a checkpoint file (bad magic)");
  }
  Reader header(bytes.data() + sizeof(kCheckpointMagic), kHeaderSize - sizeof(kCheckpointMagic));
  const auto version = header.u32();
  if (version != kCheckpointVersion) {
    throw CheckpointVersionError("unsupported checkpoint version " + std::to_string(version) + " (expected " +
                                 std::to_string(kCheckpointVersion) + ")");
  }
  const auto declared = header.u64();
  if (bytes.size() < declared) {
    throw CheckpointTruncatedError("checkpoint is truncated: " + std::to_string(bytes.size()) + " of " +
                                   std::to_string(declared) + " bytes");
  }
  if (bytes.size() > declared || declared < kHeaderSize + 4) {
    throw CheckpointFormatError("checkpoint length field does not match the file size");
  }
  const std::size_t body = bytes.size() - 4;
  Reader trailer(bytes.data() + body, 4);
  if (crc32_of(bytes.data(), body) != trailer.u32()) throw CheckpointChecksumError("checkpoint checksum mismatch");

  Reader r(bytes.data() + kHeaderSize, body - kHeaderSize);
  LanguageModel model;
  auto& c = model.config;
  c.vocab_size = static_cast<int>(r.u32());
  c.hidden_size = static_cast<int>(r.u32());
  c.n_layers = static_cast<int>(r.u32());
  c.seed = r.u64();
  c.learning_rate = r.f64();
  c.grad_clip = r.f64();
  c.epochs = static_cast<int>(r.u32());
  const auto mode = r.u8();
  if (mode > 1) throw CheckpointFormatError("unknown segmentation mode in checkpoint");
  model.segmenter.mode = static_cast<SegmentMode>(mode);
  model.segmenter.min_core_vowels = static_cast<int>(r.u32());
  model.segmenter.prefix_list = read_strings(r);
  for (auto& o : read_strings(r)) model.segmenter.legal_onsets.insert(std::move(o));
  try {
    c.validate();
    model.vocab = Vocab(read_strings(r));
  } catch (const std::invalid_argument& e) {
    throw CheckpointFormatError(std::string("invalid checkpoint contents: ") + e.what());
  }
  if (model.vocab.size() != c.vocab_size) throw CheckpointFormatError("vocabulary size disagrees with the config");
  model.params = ModelParams<float>({c.vocab_size, c.hidden_size, c.n_layers});
  const auto count = r.u64();
  if (count != model.params.values().size()) throw CheckpointFormatError("weight count disagrees with the config");
  for (float& v : model.params.values()) v = r.f32();
  if (r.remaining() != 0) throw CheckpointFormatError("trailing bytes after the weights");
  return model;
}

void save_checkpoint(const LanguageModel& model, const std::filesystem::path& path) {
  const auto bytes = encode_checkpoint(model);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CheckpointError("cannot open '" + path.string() + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw CheckpointError("failed writing '" + path.string() + "'");
}

LanguageModel load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointError("cannot open checkpoint '" + path.string() + "'");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_checkpoint(bytes);
}

}  // namespace sylaba::nnet
