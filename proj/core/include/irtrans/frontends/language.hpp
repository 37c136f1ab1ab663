#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace irtrans::frontends {

// Tag strings: a source language ("cpp", "rust", ...) or its IR dialect
// ("ir-cpp", "ir-rust", ...).
inline constexpr std::string_view kDialectPrefix = "ir-";

bool is_dialect(std::string_view tag);
std::string dialect_of(std::string_view source_tag);
std::string source_of(std::string_view dialect_tag);

struct LanguageInfo {
  std::string tag;
  std::vector<std::string> extensions;  // first one is used for temp files
};

// Languages the extractor knows how to scan.
const LanguageInfo* find_language(std::string_view tag);
std::vector<std::string> known_languages();

// Closed tag set: every source language contributes itself and its dialect.
// Ids: sources 0..n-1 in insertion order, dialects n..2n-1.
class LanguageSet {
 public:
  LanguageSet() = default;
  explicit LanguageSet(std::vector<std::string> sources);

  const std::vector<std::string>& sources() const { return sources_; }
  std::size_t size() const { return 2 * sources_.size(); }
  bool contains(std::string_view tag) const;
  // Throws Error(kInvalidArgument) for unknown tags.
  int id(std::string_view tag) const;
  std::string tag(int id) const;

  bool operator==(const LanguageSet&) const = default;

 private:
  std::vector<std::string> sources_;
};

}  // namespace irtrans::frontends
