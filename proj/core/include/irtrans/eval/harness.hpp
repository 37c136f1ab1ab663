#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "irtrans/util/config_file.hpp"

namespace irtrans::eval {

inline constexpr std::string_view kCandidateMarker = "{{CANDIDATE}}";

struct EvalCase {
  std::string problem_id;
  std::string language;
  std::string reference;
  std::string test_template;
};

// problems/<id>/<lang>.src + problems/<id>/<lang>.test, ordered by problem id
// then language.
struct EvalSet {
  std::vector<EvalCase> cases;

  // Throws Error(kInvalidEvalSet) for a missing directory, a .src without its
  // .test, or a template lacking the candidate marker.
  static EvalSet load(const std::filesystem::path& dir);
  const EvalCase* find(std::string_view problem, std::string_view language) const;
  std::vector<std::string> languages() const;
  std::size_t problem_count() const;
};

enum class Outcome { kPass, kTestFailure, kCompileError, kRuntimeError, kTimeout };
std::string_view outcome_name(Outcome o);

struct CaseStatus {
  Outcome outcome = Outcome::kPass;
  std::vector<std::string> error_ids;  // compile_error only
  std::string detail;                  // compiler or runtime stderr, truncated

  bool passed() const { return outcome == Outcome::kPass; }
};

// Compile and run templates use {src} and {exe}. Diagnostics are matched
// with error_pattern; capture group 1 (or the whole match) is the identifier.
struct Toolchain {
  std::string compile;
  std::string run = "{exe}";
  std::string extension;
  std::string error_pattern;
};

struct HarnessConfig {
  std::map<std::string, Toolchain> toolchains;
  std::chrono::milliseconds compile_timeout{std::chrono::seconds(10)};
  std::chrono::milliseconds run_timeout{std::chrono::seconds(5)};
  std::size_t memory_limit_bytes = std::size_t{1} << 30;  // for the test binary
  std::size_t jobs = 1;

  // cpp via clang++, rust via rustc -O.
  static HarnessConfig defaults();
  // [eval] compile_timeout_ms, run_timeout_ms, memory_limit_mb, jobs and
  // [toolchain.<lang>] compile, run, extension, error_pattern.
  static HarnessConfig from_config(const util::ConfigFile& file, HarnessConfig base);
  // Configured and its compiler found on PATH.
  bool available(std::string_view language) const;
};

// Substitutes the candidate, compiles in a fresh temp dir and runs the test
// binary. Exit 0 is pass, 1 test_failure, anything else runtime_error.
// Throws Error(kToolchainMissing) when the language is not available.
CaseStatus run_case(std::string_view candidate, const EvalCase& c, const HarnessConfig& cfg);

// Error(kInvalidEvalSet) naming the first reference that fails its own tests.
// Languages without an available toolchain are not checked.
void validate_eval_set(const EvalSet& set, const HarnessConfig& cfg);

// statuses[case][candidate]: fraction of cases where one of the first k passes.
double compute_ca(const std::vector<std::vector<CaseStatus>>& statuses, std::size_t k);

// Sentence BLEU-4 in [0, 100], uniform weights, no smoothing, brevity
// penalty exp(1 - r/c) when c < r. Error(kEmptyInput) for an empty side.
double compute_bleu(const std::vector<std::string>& candidate, const std::vector<std::string>& reference);
double compute_bleu(const std::vector<int>& candidate, const std::vector<int>& reference);
// Corpus BLEU: n-gram matches and lengths summed over all pairs first.
double compute_corpus_bleu(const std::vector<std::vector<int>>& candidates,
                           const std::vector<std::vector<int>>& references);

// Returns the first k candidate texts for `source` (a case in language src)
// translated into tgt.
using CandidateFn =
    std::function<std::vector<std::string>(const EvalCase& source, std::string_view tgt, std::size_t k)>;
// Tokenizer used for BLEU.
using TokenizeFn = std::function<std::vector<int>(std::string_view)>;

struct DirectionResult {
  std::string src;
  std::string tgt;
  bool skipped = false;
  std::string skip_reason;
  std::vector<std::string> problems;
  std::vector<std::vector<CaseStatus>> statuses;
  double ca1 = 0.0;
  double cak = 0.0;
  double bleu = 0.0;
  std::map<std::string, std::size_t> error_histogram;
};

struct EvalReport {
  std::size_t k = 1;
  std::vector<DirectionResult> directions;

  // Mean CA@1 over evaluated directions.
  double average_ca1() const;
  std::string to_json() const;
  // One row per direction, then "to X" / "from X" averages and the overall mean.
  std::string to_table() const;
};

// "a-b" -> (a, b); Error(kInvalidArgument) otherwise.
std::pair<std::string, std::string> parse_direction(std::string_view text);

// For every direction and every problem present in both languages: get k
// candidates, run them against the target case, aggregate CA@1, CA@k, BLEU of
// the first candidate and the compile-error histogram. Directions whose
// target toolchain is unavailable are reported as skipped.
EvalReport evaluate(const EvalSet& set, const std::vector<std::pair<std::string, std::string>>& directions,
                    const CandidateFn& candidates, const TokenizeFn& tokenize, std::size_t k,
                    const HarnessConfig& cfg);

}  // namespace irtrans::eval
