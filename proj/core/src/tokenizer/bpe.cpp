#include "irtrans/tokenizer/bpe.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <unordered_map>

#include "irtrans/error.hpp"
#include "irtrans/frontends/record.hpp"
#include "irtrans/util/files.hpp"

namespace irtrans::tokenizer {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

std::uint64_t key_of(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

// Replaces every non-overlapping (left, right) occurrence, scanning left to right.
void apply_merge(std::vector<int>& symbols, int left, int right, int result) {
  std::size_t w = 0;
  for (std::size_t r = 0; r < symbols.size();) {
    if (r + 1 < symbols.size() && symbols[r] == left && symbols[r + 1] == right) {
      symbols[w++] = result;
      r += 2;
    } else {
      symbols[w++] = symbols[r++];
    }
  }
  symbols.resize(w);
}

}  // namespace

std::vector<std::string_view> pretokenize(std::string_view text) {
  std::vector<std::string_view> chunks;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t start = i;
    while (i < text.size() && is_space(text[i])) ++i;
    while (i < text.size() && !is_space(text[i])) ++i;
    chunks.push_back(text.substr(start, i - start));
  }
  return chunks;
}

Vocab train_vocab(const std::vector<std::string>& texts, std::size_t target_size, bool byte_fallback) {
  std::map<std::string, long> chunk_counts;
  std::set<unsigned char> seen;
  for (const auto& t : texts) {
    for (auto chunk : pretokenize(t)) {
      ++chunk_counts[std::string(chunk)];
      for (unsigned char c : chunk) seen.insert(c);
    }
  }
  if (chunk_counts.empty()) throw Error(ErrorCode::kEmptyCorpus, "no text to learn a vocabulary from");

  Vocab vocab(byte_fallback, std::vector<unsigned char>(seen.begin(), seen.end()));
  if (target_size <= static_cast<std::size_t>(Vocab::kReserved) + (byte_fallback ? 256 : seen.size())) {
    throw Error(ErrorCode::kInvalidArgument, "target vocabulary size " + std::to_string(target_size) +
                                                 " must exceed reserved plus byte tokens (" +
                                                 std::to_string(vocab.size()) + ")");
  }

  std::vector<std::vector<int>> words;
  std::vector<long> freq;
  words.reserve(chunk_counts.size());
  for (const auto& [chunk, count] : chunk_counts) {
    std::vector<int> ids;
    ids.reserve(chunk.size());
    for (unsigned char c : chunk) ids.push_back(*vocab.byte_id(c));
    words.push_back(std::move(ids));
    freq.push_back(count);
  }

  std::unordered_map<std::uint64_t, long> pair_counts;
  while (vocab.size() < target_size) {
    pair_counts.clear();
    for (std::size_t w = 0; w < words.size(); ++w) {
      const auto& s = words[w];
      for (std::size_t i = 0; i + 1 < s.size(); ++i) pair_counts[key_of(s[i], s[i + 1])] += freq[w];
    }
    std::uint64_t best_key = 0;
    long best_count = 0;
    for (const auto& [key, count] : pair_counts) {
      if (count > best_count || (count == best_count && key < best_key)) {
        best_key = key;
        best_count = count;
      }
    }
    if (best_count < 2) break;
    int left = static_cast<int>(best_key >> 32);
    int right = static_cast<int>(best_key & 0xffffffffu);
    int result = vocab.add_merge(left, right);
    for (auto& s : words) {
      if (s.size() >= 2) apply_merge(s, left, right, result);
    }
  }
  return vocab;
}

std::vector<std::string> corpus_texts(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw Error(ErrorCode::kIOError, "corpus directory not found: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.is_regular_file()) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<std::string> texts;
  auto ends_with = [](const std::string& s, std::string_view suf) {
    return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
  };
  for (const auto& f : files) {
    auto name = f.filename().string();
    if (ends_with(name, ".mono.jsonl")) {
      for (const auto& r : frontends::read_shard(f.string())) texts.push_back(r.source);
    } else if (ends_with(name, ".para.jsonl")) {
      for (const auto& r : frontends::read_shard(f.string())) {
        if (r.normalized_ir) texts.push_back(*r.normalized_ir);
      }
    }
  }
  return texts;
}

std::vector<int> encode_ids(std::string_view text, const Vocab& vocab) {
  std::vector<int> out;
  std::vector<int> symbols;
  for (auto chunk : pretokenize(text)) {
    symbols.clear();
    for (unsigned char c : chunk) {
      auto id = vocab.byte_id(c);
      if (!id) {
        char buf[8];
        std::snprintf(buf, sizeof buf, "0x%02x", c);
        throw Error(ErrorCode::kUnknownByte, std::string("byte ") + buf + " is not in the vocabulary");
      }
      symbols.push_back(*id);
    }
    while (symbols.size() >= 2) {
      int best_rank = -1;
      int best_result = -1;
      int left = 0;
      int right = 0;
      for (std::size_t i = 0; i + 1 < symbols.size(); ++i) {
        if (auto m = vocab.merge_of(symbols[i], symbols[i + 1])) {
          if (best_rank < 0 || m->first < best_rank) {
            best_rank = m->first;
            best_result = m->second;
            left = symbols[i];
            right = symbols[i + 1];
          }
        }
      }
      if (best_rank < 0) break;
      apply_merge(symbols, left, right, best_result);
    }
    out.insert(out.end(), symbols.begin(), symbols.end());
  }
  return out;
}

TokenSequence encode(std::string_view text, std::string language, const Vocab& vocab) {
  TokenSequence seq;
  seq.language = std::move(language);
  seq.ids.push_back(Vocab::kBos);
  auto body = encode_ids(text, vocab);
  seq.ids.insert(seq.ids.end(), body.begin(), body.end());
  seq.ids.push_back(Vocab::kEos);
  return seq;
}

std::string decode(const std::vector<int>& ids, const Vocab& vocab) {
  std::string out;
  for (int id : ids) {
    if (id < 0 || static_cast<std::size_t>(id) >= vocab.size()) {
      throw Error(ErrorCode::kUnknownToken, "token id " + std::to_string(id) + " outside the vocabulary");
    }
    if (vocab.is_special(id)) continue;
    out += vocab.token(id);
  }
  return out;
}

}  // namespace irtrans::tokenizer
