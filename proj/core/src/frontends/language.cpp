#include "irtrans/frontends/language.hpp"

#include <algorithm>

#include "irtrans/error.hpp"

namespace irtrans::frontends {
namespace {

const std::vector<LanguageInfo>& registry() {
  static const std::vector<LanguageInfo> langs = {
      {"cpp", {".cpp", ".cc", ".cxx", ".hpp", ".h"}},
      {"c", {".c"}},
      {"rust", {".rs"}},
      {"go", {".go"}},
      {"java", {".java"}},
  };
  return langs;
}

}  // namespace

bool is_dialect(std::string_view tag) { return tag.substr(0, kDialectPrefix.size()) == kDialectPrefix; }

std::string dialect_of(std::string_view source_tag) {
  if (is_dialect(source_tag)) throw Error(ErrorCode::kInvalidArgument, "already a dialect tag: " + std::string(source_tag));
  return std::string(kDialectPrefix) + std::string(source_tag);
}

std::string source_of(std::string_view dialect_tag) {
  if (!is_dialect(dialect_tag)) throw Error(ErrorCode::kInvalidArgument, "not a dialect tag: " + std::string(dialect_tag));
  return std::string(dialect_tag.substr(kDialectPrefix.size()));
}

const LanguageInfo* find_language(std::string_view tag) {
  for (const auto& l : registry()) {
    if (l.tag == tag) return &l;
  }
  return nullptr;
}

std::vector<std::string> known_languages() {
  std::vector<std::string> out;
  for (const auto& l : registry()) out.push_back(l.tag);
  return out;
}

LanguageSet::LanguageSet(std::vector<std::string> sources) : sources_(std::move(sources)) {
  for (std::size_t i = 0; i < sources_.size(); ++i) {
    if (sources_[i].empty() || is_dialect(sources_[i])) {
      throw Error(ErrorCode::kInvalidArgument, "invalid source language tag '" + sources_[i] + "'");
    }
    if (std::find(sources_.begin(), sources_.begin() + static_cast<long>(i), sources_[i]) != sources_.begin() + static_cast<long>(i)) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate language tag '" + sources_[i] + "'");
    }
  }
}

bool LanguageSet::contains(std::string_view tag) const {
  auto base = is_dialect(tag) ? tag.substr(kDialectPrefix.size()) : tag;
  return std::find(sources_.begin(), sources_.end(), base) != sources_.end();
}

int LanguageSet::id(std::string_view tag) const {
  bool dialect = is_dialect(tag);
  auto base = dialect ? tag.substr(kDialectPrefix.size()) : tag;
  auto it = std::find(sources_.begin(), sources_.end(), base);
  if (it == sources_.end()) throw Error(ErrorCode::kInvalidArgument, "unknown language tag '" + std::string(tag) + "'");
  int idx = static_cast<int>(it - sources_.begin());
  return dialect ? idx + static_cast<int>(sources_.size()) : idx;
}

std::string LanguageSet::tag(int id) const {
  int n = static_cast<int>(sources_.size());
  if (id < 0 || id >= 2 * n) throw Error(ErrorCode::kInvalidArgument, "language id out of range: " + std::to_string(id));
  return id < n ? sources_[id] : dialect_of(sources_[id - n]);
}

}  // namespace irtrans::frontends
