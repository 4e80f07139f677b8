#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "sylaba/corpus.hpp"
#include "sylaba/nnet.hpp"
#include "sylaba/segmenter.hpp"

namespace sylaba::nnet {

// Everything needed to run a trained model on raw text.
struct LanguageModel {
  ModelConfig config;
  SegmenterConfig segmenter;
  Vocab vocab;
  ModelParams<float> params;
};

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class CheckpointFormatError : public CheckpointError {
 public:
  using CheckpointError::CheckpointError;
};
class CheckpointVersionError : public CheckpointError {
 public:
  using CheckpointError::CheckpointError;
};
class CheckpointTruncatedError : public CheckpointError {
 public:
  using CheckpointError::CheckpointError;
};
class CheckpointChecksumError : public CheckpointError {
 public:
  using CheckpointError::CheckpointError;
};

inline constexpr char kCheckpointMagic[8] = {'S', 'Y', 'L', 'B', 'C', 'K', 'P', 'T'};
inline constexpr std::uint32_t kCheckpointVersion = 1;

// Little-endian layout:
//   magic[8] "SYLBCKPT" | u32 version | u64 total file length
//   model config: u32 vocab, u32 hidden, u32 layers, u64 seed,
//                 f64 learning rate, f64 grad clip, u32 epochs
//   segmenter:    u8 mode, u32 min_core_vowels,
//                 u32 n + n strings (prefixes), u32 n + n strings (onsets)
//   vocab:        u32 n + n strings, index order
//   weights:      u64 n + n f32, in ModelParams buffer order
//   u32 CRC-32 of every preceding byte
// Strings are u32 byte length + UTF-8 bytes.
std::vector<std::uint8_t> encode_checkpoint(const LanguageModel& model);
LanguageModel decode_checkpoint(const std::vector<std::uint8_t>& bytes);

void save_checkpoint(const LanguageModel& model, const std::filesystem::path& path);
LanguageModel load_checkpoint(const std::filesystem::path& path);

}  // namespace sylaba::nnet
