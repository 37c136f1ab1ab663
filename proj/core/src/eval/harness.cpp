#include "irtrans/eval/harness.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "irtrans/error.hpp"
#include "irtrans/util/files.hpp"
#include "irtrans/util/parallel.hpp"
#include "irtrans/util/subprocess.hpp"

namespace irtrans::eval {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

std::string truncate(std::string s, std::size_t n = 2000) {
  if (s.size() > n) s.resize(n);
  return s;
}

std::string substitute(std::string_view tmpl, std::string_view candidate) {
  std::string out;
  std::size_t pos = 0;
  for (;;) {
    auto at = tmpl.find(kCandidateMarker, pos);
    if (at == std::string_view::npos) break;
    out.append(tmpl.substr(pos, at - pos));
    out.append(candidate);
    pos = at + kCandidateMarker.size();
  }
  out.append(tmpl.substr(pos));
  return out;
}

std::vector<std::string> error_ids(const std::string& diagnostics, const std::string& pattern) {
  std::vector<std::string> ids;
  if (pattern.empty()) return ids;
  std::regex re(pattern);
  for (std::sregex_iterator it(diagnostics.begin(), diagnostics.end(), re), end; it != end; ++it) {
    const auto& m = *it;
    std::string id = m.size() > 1 && m[1].matched ? m[1].str() : m[0].str();
    id = std::string(util::trim(id));
    if (!id.empty()) ids.push_back(std::move(id));
  }
  return ids;
}

template <typename T>
struct NgramStats {
  std::array<std::size_t, 4> matches{};
  std::array<std::size_t, 4> totals{};
  std::size_t cand_len = 0;
  std::size_t ref_len = 0;
};

template <typename T>
void accumulate_ngrams(const std::vector<T>& cand, const std::vector<T>& ref, NgramStats<T>& s) {
  s.cand_len += cand.size();
  s.ref_len += ref.size();
  for (std::size_t n = 1; n <= 4; ++n) {
    std::map<std::vector<T>, std::size_t> ref_counts;
    for (std::size_t i = 0; i + n <= ref.size(); ++i) ref_counts[std::vector<T>(ref.begin() + i, ref.begin() + i + n)]++;
    std::map<std::vector<T>, std::size_t> cand_counts;
    for (std::size_t i = 0; i + n <= cand.size(); ++i) cand_counts[std::vector<T>(cand.begin() + i, cand.begin() + i + n)]++;
    for (const auto& [gram, count] : cand_counts) {
      auto it = ref_counts.find(gram);
      if (it != ref_counts.end()) s.matches[n - 1] += std::min(count, it->second);
    }
    s.totals[n - 1] += cand.size() >= n ? cand.size() - n + 1 : 0;
  }
}

template <typename T>
double bleu_from(const NgramStats<T>& s) {
  double log_sum = 0.0;
  for (std::size_t n = 0; n < 4; ++n) {
    if (s.matches[n] == 0 || s.totals[n] == 0) return 0.0;
    log_sum += std::log(static_cast<double>(s.matches[n]) / static_cast<double>(s.totals[n]));
  }
  double bp = s.cand_len < s.ref_len
                  ? std::exp(1.0 - static_cast<double>(s.ref_len) / static_cast<double>(s.cand_len))
                  : 1.0;
  return 100.0 * bp * std::exp(log_sum / 4.0);
}

template <typename T>
double sentence_bleu(const std::vector<T>& cand, const std::vector<T>& ref) {
  if (cand.empty() || ref.empty()) throw Error(ErrorCode::kEmptyInput, "BLEU needs nonempty candidate and reference");
  NgramStats<T> s;
  accumulate_ngrams(cand, ref, s);
  return bleu_from(s);
}

std::string fmt(double v, int precision = 4) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(precision) << v;
  return o.str();
}

}  // namespace

EvalSet EvalSet::load(const fs::path& dir) {
  auto problems = dir / "problems";
  if (!fs::is_directory(problems)) {
    throw Error(ErrorCode::kInvalidEvalSet, "no problems/ directory under " + dir.string());
  }
  EvalSet set;
  std::vector<fs::path> problem_dirs;
  for (const auto& e : fs::directory_iterator(problems)) {
    if (e.is_directory()) problem_dirs.push_back(e.path());
  }
  std::sort(problem_dirs.begin(), problem_dirs.end());
  for (const auto& pd : problem_dirs) {
    std::vector<fs::path> srcs;
    for (const auto& e : fs::directory_iterator(pd)) {
      if (e.path().extension() == ".src") srcs.push_back(e.path());
    }
    std::sort(srcs.begin(), srcs.end());
    for (const auto& src : srcs) {
      auto test = fs::path(src).replace_extension(".test");
      if (!fs::exists(test)) throw Error(ErrorCode::kInvalidEvalSet, "missing test scaffold " + test.string());
      EvalCase c{pd.filename().string(), src.stem().string(), util::read_file(src), util::read_file(test)};
      if (c.test_template.find(kCandidateMarker) == std::string::npos) {
        throw Error(ErrorCode::kInvalidEvalSet, test.string() + " has no " + std::string(kCandidateMarker) + " marker");
      }
      set.cases.push_back(std::move(c));
    }
  }
  if (set.cases.empty()) throw Error(ErrorCode::kInvalidEvalSet, "eval set " + dir.string() + " is empty");
  return set;
}

const EvalCase* EvalSet::find(std::string_view problem, std::string_view language) const {
  for (const auto& c : cases) {
    if (c.problem_id == problem && c.language == language) return &c;
  }
  return nullptr;
}

std::vector<std::string> EvalSet::languages() const {
  std::set<std::string> s;
  for (const auto& c : cases) s.insert(c.language);
  return {s.begin(), s.end()};
}

std::size_t EvalSet::problem_count() const {
  std::set<std::string> s;
  for (const auto& c : cases) s.insert(c.problem_id);
  return s.size();
}

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kPass: return "pass";
    case Outcome::kTestFailure: return "test_failure";
    case Outcome::kCompileError: return "compile_error";
    case Outcome::kRuntimeError: return "runtime_error";
    case Outcome::kTimeout: return "timeout";
  }
  return "unknown";
}

HarnessConfig HarnessConfig::defaults() {
  HarnessConfig c;
  c.toolchains["cpp"] = Toolchain{"clang++ -std=c++17 -O1 -w -o {exe} {src}", "{exe}", ".cpp", R"(error: ([^'"\n]+))"};
  c.toolchains["rust"] = Toolchain{"rustc -O -A warnings -o {exe} {src}", "{exe}", ".rs", R"(error\[(E\d{4})\])"};
  return c;
}

HarnessConfig HarnessConfig::from_config(const util::ConfigFile& f, HarnessConfig c) {
  c.compile_timeout = std::chrono::milliseconds(f.get_int("eval.compile_timeout_ms", c.compile_timeout.count()));
  c.run_timeout = std::chrono::milliseconds(f.get_int("eval.run_timeout_ms", c.run_timeout.count()));
  c.memory_limit_bytes = static_cast<std::size_t>(
      f.get_int("eval.memory_limit_mb", static_cast<long long>(c.memory_limit_bytes >> 20)) << 20);
  c.jobs = static_cast<std::size_t>(f.get_int("eval.jobs", static_cast<long long>(c.jobs)));
  for (const auto& lang : f.sections("toolchain")) {
    auto key = "toolchain." + lang + ".";
    auto& t = c.toolchains[lang];
    t.compile = f.get_or(key + "compile", t.compile);
    t.run = f.get_or(key + "run", t.run.empty() ? "{exe}" : t.run);
    t.extension = f.get_or(key + "extension", t.extension);
    t.error_pattern = f.get_or(key + "error_pattern", t.error_pattern);
  }
  return c;
}

bool HarnessConfig::available(std::string_view language) const {
  auto it = toolchains.find(std::string(language));
  return it != toolchains.end() && !it->second.compile.empty() && util::command_available(it->second.compile);
}

CaseStatus run_case(std::string_view candidate, const EvalCase& c, const HarnessConfig& cfg) {
  if (!cfg.available(c.language)) {
    throw Error(ErrorCode::kToolchainMissing, "no working toolchain for '" + c.language + "'");
  }
  const auto& tc = cfg.toolchains.at(c.language);
  util::TempDir dir("irtrans-eval");
  auto src = dir.path() / ("case" + tc.extension);
  auto exe = dir.path() / "case.bin";
  util::write_file(src, substitute(c.test_template, candidate));

  util::ProcessOptions copt;
  copt.working_directory = dir.path();
  copt.timeout = cfg.compile_timeout;
  auto compiled = util::run_shell(util::expand_template(tc.compile, {{"src", src.string()}, {"exe", exe.string()}}), copt);
  CaseStatus status;
  if (compiled.timed_out) {
    status.outcome = Outcome::kTimeout;
    status.detail = "compilation timed out";
    return status;
  }
  if (compiled.exit_code != 0) {
    status.outcome = Outcome::kCompileError;
    auto diagnostics = compiled.err + compiled.out;
    status.error_ids = error_ids(diagnostics, tc.error_pattern);
    status.detail = truncate(diagnostics);
    return status;
  }
  util::ProcessOptions ropt;
  ropt.working_directory = dir.path();
  ropt.timeout = cfg.run_timeout;
  if (cfg.memory_limit_bytes > 0) ropt.memory_limit_bytes = cfg.memory_limit_bytes;
  auto ran = util::run_shell(util::expand_template(tc.run, {{"exe", exe.string()}}), ropt);
  if (ran.timed_out) {
    status.outcome = Outcome::kTimeout;
    status.detail = "test run timed out";
  } else if (ran.exit_code == 0) {
    status.outcome = Outcome::kPass;
  } else if (ran.exit_code == 1) {
    status.outcome = Outcome::kTestFailure;
  } else {
    status.outcome = Outcome::kRuntimeError;
    status.detail = "exit code " + std::to_string(ran.exit_code) + ": " + truncate(ran.err);
  }
  return status;
}

void validate_eval_set(const EvalSet& set, const HarnessConfig& cfg) {
  std::vector<const EvalCase*> checked;
  for (const auto& c : set.cases) {
    if (cfg.available(c.language)) checked.push_back(&c);
  }
  auto statuses = util::parallel_map(checked.size(), cfg.jobs,
                                     [&](std::size_t i) { return run_case(checked[i]->reference, *checked[i], cfg); });
  for (std::size_t i = 0; i < checked.size(); ++i) {
    if (!statuses[i].passed()) {
      throw Error(ErrorCode::kInvalidEvalSet, "reference " + checked[i]->problem_id + "/" + checked[i]->language +
                                                  " fails its own tests (" +
                                                  std::string(outcome_name(statuses[i].outcome)) + ")");
    }
  }
}

double compute_ca(const std::vector<std::vector<CaseStatus>>& statuses, std::size_t k) {
  if (statuses.empty()) return 0.0;
  std::size_t solved = 0;
  for (const auto& row : statuses) {
    if (row.empty()) throw Error(ErrorCode::kInvalidArgument, "a case has no candidate");
    auto upto = std::min(k, row.size());
    if (std::any_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(upto), [](const auto& s) { return s.passed(); })) {
      ++solved;
    }
  }
  return static_cast<double>(solved) / static_cast<double>(statuses.size());
}

double compute_bleu(const std::vector<std::string>& candidate, const std::vector<std::string>& reference) {
  return sentence_bleu(candidate, reference);
}

double compute_bleu(const std::vector<int>& candidate, const std::vector<int>& reference) {
  return sentence_bleu(candidate, reference);
}

double compute_corpus_bleu(const std::vector<std::vector<int>>& candidates,
                           const std::vector<std::vector<int>>& references) {
  if (candidates.size() != references.size()) throw Error(ErrorCode::kInvalidArgument, "BLEU corpus size mismatch");
  NgramStats<int> s;
  for (std::size_t i = 0; i < candidates.size(); ++i) accumulate_ngrams(candidates[i], references[i], s);
  if (s.cand_len == 0 || s.ref_len == 0) return 0.0;
  return bleu_from(s);
}

double EvalReport::average_ca1() const {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& d : directions) {
    if (d.skipped) continue;
    sum += d.ca1;
    ++n;
  }
  return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

std::string EvalReport::to_json() const {
  json dirs = json::array();
  for (const auto& d : directions) {
    json cases = json::array();
    for (std::size_t i = 0; i < d.problems.size(); ++i) {
      json st = json::array();
      for (const auto& s : d.statuses[i]) {
        st.push_back({{"outcome", outcome_name(s.outcome)}, {"error_ids", s.error_ids}});
      }
      cases.push_back({{"problem", d.problems[i]}, {"candidates", st}});
    }
    json j = {{"direction", d.src + "-" + d.tgt}, {"skipped", d.skipped}};
    if (d.skipped) {
      j["reason"] = d.skip_reason;
    } else {
      j["ca@1"] = d.ca1;
      j["ca@" + std::to_string(k)] = d.cak;
      j["bleu"] = d.bleu;
      j["error_histogram"] = d.error_histogram;
      j["cases"] = cases;
    }
    dirs.push_back(std::move(j));
  }
  return json{{"k", k}, {"directions", dirs}, {"average_ca@1", average_ca1()}}.dump(2);
}

std::string EvalReport::to_table() const {
  std::ostringstream o;
  const std::string cak = "CA@" + std::to_string(k);
  o << std::left << std::setw(16) << "direction" << std::right << std::setw(9) << "CA@1" << std::setw(9) << cak
    << std::setw(9) << "BLEU" << std::setw(8) << "cases" << "  status\n";
  std::map<std::string, std::pair<double, int>> to, from;
  for (const auto& d : directions) {
    o << std::left << std::setw(16) << (d.src + " -> " + d.tgt) << std::right;
    if (d.skipped) {
      o << std::setw(9) << "-" << std::setw(9) << "-" << std::setw(9) << "-" << std::setw(8) << "-"
        << "  skipped: " << d.skip_reason << "\n";
      continue;
    }
    o << std::setw(9) << fmt(d.ca1 * 100, 2) << std::setw(9) << fmt(d.cak * 100, 2) << std::setw(9) << fmt(d.bleu, 2)
      << std::setw(8) << d.problems.size() << "  ok\n";
    to[d.tgt].first += d.ca1;
    to[d.tgt].second += 1;
    from[d.src].first += d.ca1;
    from[d.src].second += 1;
  }
  for (const auto& [lang, acc] : to) {
    o << std::left << std::setw(16) << ("to " + lang) << std::right << std::setw(9) << fmt(acc.first / acc.second * 100, 2) << "\n";
  }
  for (const auto& [lang, acc] : from) {
    o << std::left << std::setw(16) << ("from " + lang) << std::right << std::setw(9) << fmt(acc.first / acc.second * 100, 2) << "\n";
  }
  o << std::left << std::setw(16) << "average" << std::right << std::setw(9) << fmt(average_ca1() * 100, 2) << "\n";
  return o.str();
}

std::pair<std::string, std::string> parse_direction(std::string_view text) {
  auto dash = text.find('-');
  if (dash == std::string_view::npos || dash == 0 || dash + 1 >= text.size()) {
    throw Error(ErrorCode::kInvalidArgument, "direction must look like src-tgt, got '" + std::string(text) + "'");
  }
  return {std::string(text.substr(0, dash)), std::string(text.substr(dash + 1))};
}

EvalReport evaluate(const EvalSet& set, const std::vector<std::pair<std::string, std::string>>& directions,
                    const CandidateFn& candidates, const TokenizeFn& tokenize, std::size_t k,
                    const HarnessConfig& cfg) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  EvalReport report;
  report.k = k;
  for (const auto& [src, tgt] : directions) {
    DirectionResult d;
    d.src = src;
    d.tgt = tgt;
    if (!cfg.available(tgt)) {
      d.skipped = true;
      d.skip_reason = "no toolchain for " + tgt;
      report.directions.push_back(std::move(d));
      continue;
    }
    std::vector<std::pair<const EvalCase*, const EvalCase*>> pairs;
    for (const auto& c : set.cases) {
      if (c.language != src) continue;
      if (const auto* t = set.find(c.problem_id, tgt)) pairs.emplace_back(&c, t);
    }
    std::vector<std::vector<std::string>> texts;
    texts.reserve(pairs.size());
    for (const auto& [s, t] : pairs) {
      std::vector<std::string> cands;
      try {
        cands = candidates(*s, tgt, k);
      } catch (const Error&) {
        cands = {""};  // untranslatable input counts as a failed candidate
      }
      if (cands.empty()) cands = {""};
      if (cands.size() > k) cands.resize(k);
      texts.push_back(std::move(cands));
    }
    std::vector<std::pair<std::size_t, std::size_t>> jobs;
    for (std::size_t i = 0; i < texts.size(); ++i) {
      for (std::size_t j = 0; j < texts[i].size(); ++j) jobs.emplace_back(i, j);
    }
    auto graded = util::parallel_map(jobs.size(), cfg.jobs, [&](std::size_t n) {
      auto [i, j] = jobs[n];
      return run_case(texts[i][j], *pairs[i].second, cfg);
    });
    d.statuses.resize(pairs.size());
    for (std::size_t n = 0; n < jobs.size(); ++n) d.statuses[jobs[n].first].push_back(std::move(graded[n]));
    std::vector<std::vector<int>> cand_tokens, ref_tokens;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      d.problems.push_back(pairs[i].first->problem_id);
      cand_tokens.push_back(tokenize(texts[i].front()));
      ref_tokens.push_back(tokenize(pairs[i].second->reference));
      for (const auto& s : d.statuses[i]) {
        for (const auto& id : s.error_ids) d.error_histogram[id]++;
      }
    }
    d.ca1 = compute_ca(d.statuses, 1);
    d.cak = compute_ca(d.statuses, k);
    d.bleu = compute_corpus_bleu(cand_tokens, ref_tokens);
    report.directions.push_back(std::move(d));
  }
  return report;
}

}  // namespace irtrans::eval
