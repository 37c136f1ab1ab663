#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "irtrans/tokenizer/vocab.hpp"

namespace irtrans::tokenizer {

struct TokenSequence {
  std::vector<int> ids;
  std::string language;

  std::size_t size() const { return ids.size(); }
  bool operator==(const TokenSequence&) const = default;
};

// Pre-tokenization: each chunk is a run of whitespace followed by a run of
// non-whitespace (either may be empty at the text boundaries). Merges never
// cross chunk boundaries.
std::vector<std::string_view> pretokenize(std::string_view text);

// Learns merges until the vocabulary reaches target_size or no adjacent pair
// occurs at least twice. Ties on pair count go to the smallest (left, right)
// id pair. Throws Error(kEmptyCorpus) when every text is empty and
// Error(kInvalidArgument) when target_size leaves no room for merges.
Vocab train_vocab(const std::vector<std::string>& texts, std::size_t target_size, bool byte_fallback = true);

// Code and IR text from every shard in `dir`: sources from *.mono.jsonl and
// normalized IR from *.para.jsonl, in file-name order.
std::vector<std::string> corpus_texts(const std::filesystem::path& dir);

// Token ids for `text` without BOS/EOS. Throws Error(kUnknownByte) for a byte
// missing from a vocabulary without byte fallback.
std::vector<int> encode_ids(std::string_view text, const Vocab& vocab);

// [BOS] ids [EOS].
TokenSequence encode(std::string_view text, std::string language, const Vocab& vocab);

// Concatenates token bytes; reserved tokens are dropped.
std::string decode(const std::vector<int>& ids, const Vocab& vocab);
inline std::string decode(const TokenSequence& seq, const Vocab& vocab) { return decode(seq.ids, vocab); }

}  // namespace irtrans::tokenizer
