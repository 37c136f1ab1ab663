#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "irtrans/frontends/record.hpp"
#include "irtrans/irnorm/normalize.hpp"
#include "irtrans/util/config_file.hpp"

namespace irtrans::frontends {

struct LanguageFrontend {
  // Placeholders: {in} and {out} (required, shell-quoted), {opt} (raw).
  std::string command;
  std::string optimization_flag;
  // Prepended to the function before compiling; never part of provenance.
  std::string prelude;
  // Optional regex rewrite applied to the function text (first match only),
  // e.g. to export a Rust function under its plain name.
  std::string rewrite_pattern;
  std::string rewrite_replacement;
  std::string extension;  // temp file extension, e.g. ".cpp"
};

struct FrontendConfig {
  std::map<std::string, LanguageFrontend> languages;
  std::chrono::milliseconds timeout{std::chrono::seconds(30)};
  bool keep_temp = false;  // leave per-item temp directories behind for inspection

  // clang++ for cpp, rustc for rust; both at their smallest-size setting.
  static FrontendConfig defaults();
  // Reads `[frontend]` (timeout, keep_temp) and `[frontend.<lang>]` sections on
  // top of `base`.
  static FrontendConfig from_config(const util::ConfigFile& file, FrontendConfig base);

  bool has(std::string_view language) const { return languages.count(std::string(language)) != 0; }
  // Throws Error(kInvalidArgument) when a template lacks {in}/{out} or timeout <= 0.
  void validate() const;
};

// Compiles one function. Compiler failures and timeouts are recorded in the
// returned record, never thrown. Throws Error(kMissingFrontend) when the
// record's language has no command.
FunctionRecord compile_to_ir(const FunctionRecord& fn, const FrontendConfig& cfg);

struct CorpusOptions {
  std::filesystem::path out_dir;
  std::size_t jobs = 1;
  // When both are set, records longer than max_tokens are marked
  // skipped_too_long instead of being compiled.
  std::size_t max_tokens = 0;
  std::function<std::size_t(std::string_view)> token_count;
};

struct ShardCounts {
  std::string language;
  std::size_t monolingual = 0;
  std::size_t parallel = 0;
  std::size_t ok = 0;
  std::size_t compile_error = 0;
  std::size_t timeout = 0;
  std::size_t skipped_too_long = 0;

  bool operator==(const ShardCounts&) const = default;
};

struct CorpusSummary {
  std::vector<ShardCounts> shards;  // one per requested language, in request order
  const ShardCounts* find(std::string_view language) const;
};

std::filesystem::path monolingual_shard_path(const std::filesystem::path& dir, std::string_view language);
std::filesystem::path parallel_shard_path(const std::filesystem::path& dir, std::string_view language);

// Source files under `inputs` (files or directories, searched recursively)
// with one of the language's extensions, sorted by path.
std::vector<std::filesystem::path> collect_sources(const std::vector<std::filesystem::path>& inputs,
                                                   std::string_view language);

CorpusSummary build_corpus(const std::vector<std::filesystem::path>& inputs, const std::vector<std::string>& languages,
                           const FrontendConfig& cfg, const irnorm::NormalizationConfig& norm,
                           const CorpusOptions& options);

}  // namespace irtrans::frontends
