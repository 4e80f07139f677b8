#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sylaba/segmenter.hpp"

namespace sylaba {

// Dense bijection between serialized tokens and indices. The four marker
// tokens always occupy indices 0..3 (`_unk_`, `_eol_`, `_cap_`, `_up_`);
// the rest follow in first-occurrence order.
class Vocab {
 public:
  static constexpr int kUnkIndex = 0;

  Vocab();
  // Entries must start with the four markers; throws std::invalid_argument
  // on duplicates or a missing marker.
  explicit Vocab(std::vector<std::string> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  int unk_index() const { return kUnkIndex; }
  const std::vector<std::string>& entries() const { return entries_; }

  // -1 when absent.
  int find(std::string_view serialized) const;
  // Throws std::out_of_range.
  const std::string& at(int index) const;

  std::vector<int> encode(std::span<const Token> tokens) const;
  std::vector<Token> decode(std::span<const int> indices) const;

  // Header line `#sylaba-vocab 1 <count>`, then one token per line; the
  // token on line k (0-based, after the header) has index k.
  std::string to_text() const;
  static Vocab from_text(std::string_view text);

  friend bool operator==(const Vocab& a, const Vocab& b) { return a.entries_ == b.entries_; }
  friend Vocab build_vocab(std::span<const Token> tokens);

 private:
  void add(std::string serialized);

  std::vector<std::string> entries_;
  std::unordered_map<std::string, int> index_;
};

// Throws std::invalid_argument on an empty token sequence.
Vocab build_vocab(std::span<const Token> tokens);

struct ChunkPair {
  std::vector<int> input;
  std::vector<int> target;

  friend bool operator==(const ChunkPair&, const ChunkPair&) = default;
};

inline constexpr std::size_t kDefaultChunkLength = 400;

// floor(N / length) non-overlapping chunks; the remainder is dropped.
// Throws std::invalid_argument when length < 2.
std::vector<ChunkPair> chunk(std::span<const int> indices, std::size_t length = kDefaultChunkLength);

}  // namespace sylaba
