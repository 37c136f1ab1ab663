#include "irtrans/tokenizer/vocab.hpp"

#include <cstdio>
#include <sstream>

#include "irtrans/error.hpp"
#include "irtrans/util/files.hpp"

namespace irtrans::tokenizer {
namespace {

const char* kSpecialNames[Vocab::kReserved] = {"<pad>", "<bos>", "<eos>", "<mask>", "<sep>", "<r5>", "<r6>", "<r7>",
                                               "<r8>",  "<r9>",  "<r10>", "<r11>",  "<r12>", "<r13>", "<r14>", "<r15>"};

constexpr const char* kMagic = "irtrans-vocab 1";

}  // namespace

Vocab::Vocab() : Vocab(true, {}) {}

Vocab::Vocab(bool byte_fallback, const std::vector<unsigned char>& bytes)
    : byte_fallback_(byte_fallback), byte_ids_(256, -1) {
  for (const char* name : kSpecialNames) tokens_.emplace_back(name);
  auto add_byte = [&](unsigned char b) {
    if (byte_ids_[b] >= 0) return;
    byte_ids_[b] = static_cast<int>(tokens_.size());
    tokens_.emplace_back(1, static_cast<char>(b));
    lookup_.emplace(tokens_.back(), byte_ids_[b]);
  };
  if (byte_fallback) {
    for (int b = 0; b < 256; ++b) add_byte(static_cast<unsigned char>(b));
  } else {
    for (auto b : bytes) add_byte(b);
  }
  byte_count_ = tokens_.size() - kReserved;
}

std::optional<int> Vocab::byte_id(unsigned char b) const {
  int id = byte_ids_[b];
  if (id < 0) return std::nullopt;
  return id;
}

std::optional<int> Vocab::id_of(std::string_view token_bytes) const {
  auto it = lookup_.find(std::string(token_bytes));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

int Vocab::add_merge(int left, int right) {
  if (is_special(left) || is_special(right) || left >= static_cast<int>(size()) || right >= static_cast<int>(size())) {
    throw Error(ErrorCode::kUnsupportedFormat, "merge refers to an invalid token id");
  }
  int id = static_cast<int>(tokens_.size());
  std::string merged = tokens_[static_cast<std::size_t>(left)] + tokens_[static_cast<std::size_t>(right)];
  if (lookup_.count(merged)) throw Error(ErrorCode::kUnsupportedFormat, "duplicate merged token");
  tokens_.push_back(merged);
  lookup_.emplace(std::move(merged), id);
  merge_index_.emplace(pair_key(left, right), std::make_pair(static_cast<int>(merges_.size()), id));
  merges_.push_back({left, right, id});
  return id;
}

std::optional<std::pair<int, int>> Vocab::merge_of(int left, int right) const {
  auto it = merge_index_.find(pair_key(left, right));
  if (it == merge_index_.end()) return std::nullopt;
  return it->second;
}

std::string Vocab::display(int id) const {
  const auto& t = token(id);
  if (is_special(id)) return t;
  std::string out;
  for (unsigned char c : t) {
    if (c == '\n') {
      out += "\\n";
    } else if (c == '\t') {
      out += "\\t";
    } else if (c == ' ') {
      out += "\xC2\xB7";  // middle dot keeps spaces visible
    } else if (c < 0x20 || c >= 0x7f) {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\x%02x", c);
      out += buf;
    } else {
      out += static_cast<char>(c);
    }
  }
  return out;
}

std::string Vocab::to_text() const {
  std::ostringstream os;
  os << kMagic << '\n' << "byte_fallback " << (byte_fallback_ ? 1 : 0) << '\n';
  for (std::size_t id = kReserved; id < kReserved + byte_count_; ++id) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%02x", static_cast<unsigned char>(tokens_[id][0]));
    os << "byte " << buf << '\n';
  }
  for (const auto& m : merges_) os << "merge " << m.left << ' ' << m.right << '\n';
  return os.str();
}

Vocab Vocab::from_text(std::string_view text) {
  auto lines = util::split_lines(text);
  if (lines.empty() || lines[0] != kMagic) throw Error(ErrorCode::kUnsupportedFormat, "not a vocabulary file");
  bool fallback = true;
  std::vector<unsigned char> bytes;
  std::vector<std::pair<int, int>> merges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream is(lines[i]);
    std::string kind;
    is >> kind;
    if (kind == "byte_fallback") {
      int v = 1;
      is >> v;
      fallback = v != 0;
    } else if (kind == "byte") {
      std::string hex;
      is >> hex;
      bytes.push_back(static_cast<unsigned char>(std::stoi(hex, nullptr, 16)));
    } else if (kind == "merge") {
      int l = -1;
      int r = -1;
      is >> l >> r;
      if (!is) throw Error(ErrorCode::kUnsupportedFormat, "bad merge line " + std::to_string(i + 1));
      merges.emplace_back(l, r);
    } else if (!kind.empty()) {
      throw Error(ErrorCode::kUnsupportedFormat, "unknown vocabulary line kind '" + kind + "'");
    }
  }
  Vocab v(fallback, bytes);
  if (fallback && !bytes.empty()) {
    // Byte order is fixed when fallback is on; the listed bytes must match it.
    for (std::size_t b = 0; b < bytes.size(); ++b) {
      if (bytes[b] != b) throw Error(ErrorCode::kUnsupportedFormat, "byte table out of order");
    }
  }
  for (auto [l, r] : merges) v.add_merge(l, r);
  return v;
}

void Vocab::save(const std::filesystem::path& path) const { util::write_file(path, to_text()); }

Vocab Vocab::load(const std::filesystem::path& path) { return from_text(util::read_file(path)); }

std::string Vocab::hash() const { return util::hex64(util::fnv1a64(to_text())); }

}  // namespace irtrans::tokenizer
