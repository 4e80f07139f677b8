#include "sylaba/corpus.hpp"

#include <sstream>
#include <stdexcept>

namespace sylaba {

namespace {

constexpr std::string_view kMarkers[] = {specials::kUnk, specials::kEol, specials::kCap, specials::kUp};
constexpr std::string_view kVocabHeader = "#sylaba-vocab 1";

}  // namespace

Vocab::Vocab() {
  for (auto m : kMarkers) add(std::string(m));
}

Vocab::Vocab(std::vector<std::string> entries) {
  if (entries.size() < std::size(kMarkers)) throw std::invalid_argument("vocabulary is missing marker tokens");
  for (size_t i = 0; i < std::size(kMarkers); ++i) {
    if (entries[i] != kMarkers[i]) {
      throw std::invalid_argument("vocabulary entry " + std::to_string(i) + " must be " + std::string(kMarkers[i]));
    }
  }
  for (auto& e : entries) {
    if (e.empty()) throw std::invalid_argument("empty vocabulary entry");
    if (index_.contains(e)) throw std::invalid_argument("duplicate vocabulary entry '" + e + "'");
    add(std::move(e));
  }
}

void Vocab::add(std::string serialized) {
  index_.emplace(serialized, static_cast<int>(entries_.size()));
  entries_.push_back(std::move(serialized));
}

int Vocab::find(std::string_view serialized) const {
  const auto it = index_.find(std::string(serialized));
  return it == index_.end() ? -1 : it->second;
}

const std::string& Vocab::at(int index) const {
  if (index < 0 || index >= size()) {
    throw std::out_of_range("token index " + std::to_string(index) + " outside vocabulary of size " +
                            std::to_string(size()));
  }
  return entries_[static_cast<size_t>(index)];
}

std::vector<int> Vocab::encode(std::span<const Token> tokens) const {
  std::vector<int> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    const int i = find(t.serialize());
    out.push_back(i < 0 ? kUnkIndex : i);
  }
  return out;
}

std::vector<Token> Vocab::decode(std::span<const int> indices) const {
  std::vector<Token> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(Token::parse(at(i)));
  return out;
}

std::string Vocab::to_text() const {
  std::string out = std::string(kVocabHeader) + " " + std::to_string(entries_.size()) + "\n";
  for (const auto& e : entries_) {
    out += e;
    out.push_back('\n');
  }
  return out;
}

Vocab Vocab::from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || !line.starts_with(kVocabHeader)) {
    throw std::invalid_argument("not a vocabulary file (bad header)");
  }
  const auto count = std::stoul(line.substr(kVocabHeader.size()));
  std::vector<std::string> entries;
  while (std::getline(in, line)) entries.push_back(line);
  if (entries.size() != count) {
    throw std::invalid_argument("vocabulary header declares " + std::to_string(count) + " entries, found " +
                                std::to_string(entries.size()));
  }
  return Vocab(std::move(entries));
}

Vocab build_vocab(std::span<const Token> tokens) {
  if (tokens.empty()) throw std::invalid_argument("cannot build a vocabulary from an empty token sequence");
  Vocab vocab;
  for (const auto& t : tokens) {
    std::string s = t.serialize();
    if (vocab.find(s) < 0) vocab.add(std::move(s));
  }
  return vocab;
}

std::vector<ChunkPair> chunk(std::span<const int> indices, std::size_t length) {
  if (length < 2) throw std::invalid_argument("chunk length must be at least 2");
  std::vector<ChunkPair> out;
  const size_t count = indices.size() / length;
  out.reserve(count);
  for (size_t c = 0; c < count; ++c) {
    const auto full = indices.subspan(c * length, length);
    out.push_back({std::vector<int>(full.begin(), full.end() - 1), std::vector<int>(full.begin() + 1, full.end())});
  }
  return out;
}

}  // namespace sylaba
