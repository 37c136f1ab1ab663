#include "irtrans/frontends/frontend.hpp"

#include <algorithm>
#include <regex>

#include <nlohmann/json.hpp>

#include "irtrans/error.hpp"
#include "irtrans/frontends/extract.hpp"
#include "irtrans/frontends/language.hpp"
#include "irtrans/util/files.hpp"
#include "irtrans/util/parallel.hpp"
#include "irtrans/util/subprocess.hpp"

namespace irtrans::frontends {

namespace fs = std::filesystem;

FrontendConfig FrontendConfig::defaults() {
  FrontendConfig cfg;
  cfg.languages["cpp"] = LanguageFrontend{
      "clang++ -x c++ -std=c++17 -S -emit-llvm {opt} -o {out} {in}", "-Oz", "#include <cstdint>\n", "", "", ".cpp"};
  cfg.languages["c"] = LanguageFrontend{"clang -x c -S -emit-llvm {opt} -o {out} {in}", "-Oz", "#include <stdint.h>\n", "", "", ".c"};
  cfg.languages["rust"] = LanguageFrontend{
      "rustc --crate-type=lib --emit=llvm-ir {opt} -C debuginfo=0 -A warnings -o {out} {in}",
      "-C opt-level=z",
      "",
      R"(^(pub(\([^)]*\))?\s+)?fn\s)",
      "#[no_mangle] pub fn ",
      ".rs"};
  return cfg;
}

FrontendConfig FrontendConfig::from_config(const util::ConfigFile& file, FrontendConfig base) {
  if (auto t = file.get("frontend.timeout")) {
    base.timeout = std::chrono::milliseconds(static_cast<long long>(file.get_double("frontend.timeout", 30) * 1000));
  }
  base.keep_temp = file.get_bool("frontend.keep_temp", base.keep_temp);
  for (const auto& lang : file.sections("frontend")) {
    auto key = "frontend." + lang + ".";
    auto& fe = base.languages[lang];
    fe.command = file.get_or(key + "command", fe.command);
    fe.optimization_flag = file.get_or(key + "optimization_flag", fe.optimization_flag);
    fe.prelude = file.get_or(key + "prelude", fe.prelude);
    fe.rewrite_pattern = file.get_or(key + "rewrite_pattern", fe.rewrite_pattern);
    fe.rewrite_replacement = file.get_or(key + "rewrite_replacement", fe.rewrite_replacement);
    fe.extension = file.get_or(key + "extension", fe.extension);
    if (fe.extension.empty()) {
      const auto* info = find_language(lang);
      fe.extension = info ? info->extensions.front() : ".txt";
    }
  }
  return base;
}

void FrontendConfig::validate() const {
  if (timeout.count() <= 0) throw Error(ErrorCode::kInvalidArgument, "frontend timeout must be positive");
  for (const auto& [lang, fe] : languages) {
    if (fe.command.find("{in}") == std::string::npos || fe.command.find("{out}") == std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument, "frontend command for '" + lang + "' must contain {in} and {out}");
    }
  }
}

FunctionRecord compile_to_ir(const FunctionRecord& fn, const FrontendConfig& cfg) {
  auto it = cfg.languages.find(fn.language);
  if (it == cfg.languages.end() || it->second.command.empty()) {
    throw Error(ErrorCode::kMissingFrontend, "no frontend configured for language '" + fn.language + "'");
  }
  const auto& fe = it->second;
  FunctionRecord out = fn;
  out.raw_ir.reset();
  out.normalized_ir.reset();
  out.status_message.clear();

  std::string body = fn.source;
  if (!fe.rewrite_pattern.empty()) {
    body = std::regex_replace(body, std::regex(fe.rewrite_pattern), fe.rewrite_replacement,
                              std::regex_constants::format_first_only);
  }
  util::TempDir dir("irtrans-fe");
  if (cfg.keep_temp) dir.keep();
  // Relative names keep temp paths out of the emitted IR.
  const std::string in_name = "func" + (fe.extension.empty() ? std::string(".src") : fe.extension);
  const std::string out_name = "func.ll";
  util::write_file(dir.path() / in_name, fe.prelude + body + "\n");

  auto command = util::expand_template(fe.command, {{"in", in_name}, {"out", out_name}});
  command = util::expand_template(command, {{"opt", fe.optimization_flag}}, false);
  util::ProcessOptions opts;
  opts.working_directory = dir.path();
  opts.timeout = cfg.timeout;
  auto result = util::run_shell(command, opts);

  if (result.timed_out) {
    out.compile_status = CompileStatus::kTimeout;
    out.status_message = "frontend exceeded " + std::to_string(cfg.timeout.count()) + " ms";
    return out;
  }
  if (result.exit_code != 0 || !fs::exists(dir.path() / out_name)) {
    out.compile_status = CompileStatus::kCompileError;
    out.status_message = result.err.empty() ? "exit status " + std::to_string(result.exit_code) : result.err;
    return out;
  }
  out.raw_ir = util::read_file(dir.path() / out_name);
  out.compile_status = CompileStatus::kOk;
  return out;
}

const ShardCounts* CorpusSummary::find(std::string_view language) const {
  for (const auto& s : shards) {
    if (s.language == language) return &s;
  }
  return nullptr;
}

fs::path monolingual_shard_path(const fs::path& dir, std::string_view language) {
  return dir / (std::string(language) + ".mono.jsonl");
}

fs::path parallel_shard_path(const fs::path& dir, std::string_view language) {
  return dir / (std::string(language) + ".para.jsonl");
}

std::vector<fs::path> collect_sources(const std::vector<fs::path>& inputs, std::string_view language) {
  const auto* info = find_language(language);
  if (!info) throw Error(ErrorCode::kInvalidArgument, "no source extensions known for language '" + std::string(language) + "'");
  auto matches = [&](const fs::path& p) {
    return std::find(info->extensions.begin(), info->extensions.end(), p.extension().string()) != info->extensions.end();
  };
  std::vector<fs::path> files;
  for (const auto& in : inputs) {
    std::error_code ec;
    if (fs::is_directory(in, ec)) {
      for (const auto& entry : fs::recursive_directory_iterator(in)) {
        if (entry.is_regular_file() && matches(entry.path())) files.push_back(entry.path());
      }
    } else if (fs::is_regular_file(in, ec)) {
      if (matches(in)) files.push_back(in);
    } else {
      throw Error(ErrorCode::kIOError, "input not found: " + in.string());
    }
  }
  std::sort(files.begin(), files.end());
  files.erase(std::unique(files.begin(), files.end()), files.end());
  return files;
}

CorpusSummary build_corpus(const std::vector<fs::path>& inputs, const std::vector<std::string>& languages,
                           const FrontendConfig& cfg, const irnorm::NormalizationConfig& norm,
                           const CorpusOptions& options) {
  cfg.validate();
  std::error_code ec;
  fs::create_directories(options.out_dir, ec);
  if (ec || !fs::is_directory(options.out_dir)) {
    throw Error(ErrorCode::kIOError, "cannot create output directory " + options.out_dir.string());
  }
  CorpusSummary summary;
  for (const auto& lang : languages) {
    if (!cfg.has(lang)) throw Error(ErrorCode::kMissingFrontend, "no frontend configured for language '" + lang + "'");

    std::vector<FunctionRecord> records;
    for (const auto& file : collect_sources(inputs, lang)) {
      auto found = extract_functions(util::read_file(file), lang, file.string());
      records.insert(records.end(), std::make_move_iterator(found.begin()), std::make_move_iterator(found.end()));
    }

    auto processed = util::parallel_map(records.size(), options.jobs, [&](std::size_t i) {
      const auto& r = records[i];
      if (options.max_tokens > 0 && options.token_count && options.token_count(r.source) > options.max_tokens) {
        auto skipped = r;
        skipped.compile_status = CompileStatus::kSkippedTooLong;
        return skipped;
      }
      auto compiled = compile_to_ir(r, cfg);
      if (compiled.compile_status == CompileStatus::kOk) {
        try {
          compiled.normalized_ir = irnorm::normalize(*compiled.raw_ir, norm);
        } catch (const Error& e) {
          compiled.status_message = e.what();
        }
      }
      return compiled;
    });

    ShardCounts counts;
    counts.language = lang;
    std::vector<FunctionRecord> parallel;
    for (const auto& r : processed) {
      switch (r.compile_status) {
        case CompileStatus::kOk: ++counts.ok; break;
        case CompileStatus::kCompileError: ++counts.compile_error; break;
        case CompileStatus::kTimeout: ++counts.timeout; break;
        case CompileStatus::kSkippedTooLong: ++counts.skipped_too_long; break;
        case CompileStatus::kPending: break;
      }
      if (r.compile_status == CompileStatus::kOk && r.normalized_ir) parallel.push_back(r);
    }
    counts.monolingual = processed.size();
    counts.parallel = parallel.size();
    write_shard(monolingual_shard_path(options.out_dir, lang), processed);
    write_shard(parallel_shard_path(options.out_dir, lang), parallel);
    summary.shards.push_back(counts);
  }

  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& s : summary.shards) {
    j.push_back({{"language", s.language}, {"monolingual", s.monolingual}, {"parallel", s.parallel}, {"ok", s.ok},
                 {"compile_error", s.compile_error}, {"timeout", s.timeout}, {"skipped_too_long", s.skipped_too_long}});
  }
  util::write_file(options.out_dir / "summary.json", j.dump(2) + "\n");
  return summary;
}

}  // namespace irtrans::frontends
