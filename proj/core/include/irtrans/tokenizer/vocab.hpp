#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace irtrans::tokenizer {

// Byte-level pair-merge vocabulary shared by all languages and IR dialects.
// Ids 0..15 are reserved; byte tokens follow, then merged tokens in merge order.
class Vocab {
 public:
  static constexpr int kPad = 0;
  static constexpr int kBos = 1;
  static constexpr int kEos = 2;
  static constexpr int kMask = 3;
  static constexpr int kSep = 4;
  static constexpr int kReserved = 16;

  struct Merge {
    int left;
    int right;
    int result;
  };

  Vocab();  // reserved tokens only, byte fallback on (all 256 bytes present)
  Vocab(bool byte_fallback, const std::vector<unsigned char>& bytes);

  std::size_t size() const { return tokens_.size(); }
  bool byte_fallback() const { return byte_fallback_; }
  bool is_special(int id) const { return id >= 0 && id < kReserved; }
  // Raw bytes of a non-special token, or the display name of a special one.
  const std::string& token(int id) const { return tokens_.at(static_cast<std::size_t>(id)); }
  std::optional<int> byte_id(unsigned char b) const;
  std::optional<int> id_of(std::string_view token_bytes) const;
  const std::vector<Merge>& merges() const { return merges_; }

  int add_merge(int left, int right);

  // Printable rendering of a token (escapes non-printable bytes).
  std::string display(int id) const;

  std::string to_text() const;
  static Vocab from_text(std::string_view text);
  void save(const std::filesystem::path& path) const;
  static Vocab load(const std::filesystem::path& path);
  // FNV-1a 64 of to_text(), hex.
  std::string hash() const;

  // Merge rank lookup used by the encoder.
  std::optional<std::pair<int, int>> merge_of(int left, int right) const;  // (rank, result)

  bool operator==(const Vocab& other) const { return to_text() == other.to_text(); }

 private:
  static std::uint64_t pair_key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
  }

  bool byte_fallback_ = true;
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int> lookup_;  // non-special tokens only
  std::vector<int> byte_ids_;                      // -1 when the byte is absent
  std::size_t byte_count_ = 0;
  std::vector<Merge> merges_;
  std::unordered_map<std::uint64_t, std::pair<int, int>> merge_index_;
};

}  // namespace irtrans::tokenizer
