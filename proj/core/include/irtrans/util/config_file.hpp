#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace irtrans::util {

// INI-style configuration flattened to dotted keys: `[frontend.cpp]` followed
// by `command = ...` yields the key "frontend.cpp.command". Keys outside any
// section keep their bare name.
class ConfigFile {
 public:
  static ConfigFile load(const std::filesystem::path& path);
  static ConfigFile parse(const std::string& text);

  std::optional<std::string> get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  long long get_int(const std::string& key, long long fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  // Comma-separated list, whitespace trimmed, empty entries dropped.
  std::vector<std::string> get_list(const std::string& key) const;

  // Section names directly below `prefix`, e.g. sections("frontend") -> {"cpp", "rust"}.
  std::vector<std::string> sections(const std::string& prefix) const;

  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace irtrans::util
