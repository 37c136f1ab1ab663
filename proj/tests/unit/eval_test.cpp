#include <gtest/gtest.h>

#include <random>

#include "irtrans/error.hpp"
#include "irtrans/eval/embeddings.hpp"
#include "irtrans/eval/harness.hpp"
#include "irtrans/tokenizer/bpe.hpp"
#include "support/evalset.hpp"
#include "test_support.hpp"

using namespace irtrans;
using namespace irtrans::eval;

namespace {

const EvalSet& desk() {
  static EvalSet set = EvalSet::load(test::desk_evalset());
  return set;
}

HarnessConfig harness() {
  auto c = HarnessConfig::defaults();
  c.compile_timeout = std::chrono::seconds(30);
  c.run_timeout = std::chrono::seconds(2);
  return c;
}

void require(const std::string& lang) {
  if (!harness().available(lang)) GTEST_SKIP() << lang << " toolchain not installed";
}

std::vector<int> parse_ids(const std::string& s) {
  std::vector<int> out;
  std::istringstream in(s);
  int v;
  while (in >> v) out.push_back(v);
  return out;
}

CaseStatus status(Outcome o) {
  CaseStatus s;
  s.outcome = o;
  return s;
}

}  // namespace

TEST(EvalSet, DeskSubsetShape) {
  EXPECT_GE(desk().problem_count(), 40u);
  EXPECT_EQ(desk().languages(), (std::vector<std::string>{"cpp", "rust"}));
  EXPECT_EQ(desk().cases.size(), desk().problem_count() * 2);
  ASSERT_NE(desk().find("add_two", "rust"), nullptr);
  EXPECT_EQ(desk().find("add_two", "go"), nullptr);
}

TEST(EvalSet, MissingMarkerIsInvalid) {
  util::TempDir dir;
  std::filesystem::create_directories(dir.path() / "problems" / "p");
  util::write_file(dir.path() / "problems" / "p" / "cpp.src", "int f() { return 1; }");
  util::write_file(dir.path() / "problems" / "p" / "cpp.test", "int main() {}");
  try {
    EvalSet::load(dir.path());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidEvalSet);
  }
  EXPECT_THROW(EvalSet::load(dir.path() / "nowhere"), Error);
}

TEST(RunCase, ReferencePasses) {
  require("cpp");
  require("rust");
  for (const char* p : {"add_two", "gcd", "count_primes"}) {
    for (const char* lang : {"cpp", "rust"}) {
      const auto* c = desk().find(p, lang);
      ASSERT_NE(c, nullptr);
      auto s = run_case(c->reference, *c, harness());
      EXPECT_TRUE(s.passed()) << p << "/" << lang << ": " << outcome_name(s.outcome) << " " << s.detail;
    }
  }
}

TEST(RunCase, SingleTokenMutationsFail) {
  require("cpp");
  require("rust");
  auto muts = test::load_mutations(test::desk_evalset() / "mutations.tsv");
  ASSERT_GE(muts.size(), 20u);
  for (std::size_t i = 0; i < 6; ++i) {
    const auto& m = muts[i];
    const auto* c = desk().find(m.problem, m.language);
    ASSERT_NE(c, nullptr);
    auto mutated = test::apply_mutation(c->reference, m);
    ASSERT_NE(mutated, c->reference);
    auto s = run_case(mutated, *c, harness());
    EXPECT_TRUE(s.outcome == Outcome::kTestFailure || s.outcome == Outcome::kCompileError)
        << m.problem << "/" << m.language << ": " << outcome_name(s.outcome);
  }
}

TEST(RunCase, InfiniteLoopTimesOut) {
  require("cpp");
  const auto* c = desk().find("add_two", "cpp");
  auto cfg = harness();
  cfg.run_timeout = std::chrono::milliseconds(500);
  auto s = run_case("int add_two(int a, int b) { volatile int x = 0; for (;;) { x = x + 1; } return a; }", *c, cfg);
  EXPECT_EQ(s.outcome, Outcome::kTimeout);
}

TEST(RunCase, RuntimeErrorIsNotTestFailure) {
  require("cpp");
  const auto* c = desk().find("add_two", "cpp");
  auto s = run_case("#include <cstdlib>\nint add_two(int a, int b) { std::abort(); }", *c, harness());
  EXPECT_EQ(s.outcome, Outcome::kRuntimeError);
}

TEST(RunCase, RustErrorCodesAreExtracted) {
  require("rust");
  const auto* c = desk().find("add_two", "rust");
  auto s = run_case("fn add_two(a: i32, b: i32) -> i32 {\n    \"text\"\n}\n", *c, harness());
  EXPECT_EQ(s.outcome, Outcome::kCompileError);
  ASSERT_FALSE(s.error_ids.empty());
  EXPECT_EQ(s.error_ids.front(), "E0308");
}

TEST(RunCase, CppDiagnosticsAreExtracted) {
  require("cpp");
  const auto* c = desk().find("add_two", "cpp");
  auto s = run_case("int add_two(int a, int b) { return a + q; }", *c, harness());
  EXPECT_EQ(s.outcome, Outcome::kCompileError);
  ASSERT_FALSE(s.error_ids.empty());
  EXPECT_EQ(s.error_ids.front(), "use of undeclared identifier");
}

TEST(RunCase, MissingToolchain) {
  EvalCase c{"p", "cobol", "x", "{{CANDIDATE}}"};
  try {
    run_case("x", c, harness());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kToolchainMissing);
  }
  auto cfg = harness();
  cfg.toolchains["cpp"].compile = "definitely-not-a-compiler-xyz {src}";
  EXPECT_FALSE(cfg.available("cpp"));
}

TEST(HarnessConfig, ReadsIni) {
  auto f = util::ConfigFile::parse(
      "[eval]\ncompile_timeout_ms = 1500\njobs = 3\nmemory_limit_mb = 64\n"
      "[toolchain.go]\ncompile = go build -o {exe} {src}\nextension = .go\n");
  auto c = HarnessConfig::from_config(f, HarnessConfig::defaults());
  EXPECT_EQ(c.compile_timeout, std::chrono::milliseconds(1500));
  EXPECT_EQ(c.jobs, 3u);
  EXPECT_EQ(c.memory_limit_bytes, std::size_t{64} << 20);
  EXPECT_EQ(c.toolchains.at("go").extension, ".go");
  EXPECT_EQ(c.toolchains.at("go").run, "{exe}");
  EXPECT_EQ(c.toolchains.at("cpp").extension, ".cpp");
}

TEST(ComputeCa, Basics) {
  using S = std::vector<std::vector<CaseStatus>>;
  EXPECT_EQ(compute_ca(S{{status(Outcome::kPass)}, {status(Outcome::kPass)}}, 1), 1.0);
  EXPECT_EQ(compute_ca(S{{status(Outcome::kPass)}, {status(Outcome::kTimeout)}}, 1), 0.5);
  S two = {{status(Outcome::kCompileError), status(Outcome::kPass)}};
  EXPECT_EQ(compute_ca(two, 1), 0.0);
  EXPECT_EQ(compute_ca(two, 2), 1.0);
  EXPECT_EQ(compute_ca(S{}, 1), 0.0);
}

TEST(ComputeCa, MonotoneInK) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::vector<CaseStatus>> m(1 + rng() % 8);
    for (auto& row : m) {
      row.resize(1 + rng() % 6);
      for (auto& s : row) s = status(rng() % 4 == 0 ? Outcome::kPass : Outcome::kTestFailure);
    }
    double prev = 0.0;
    for (std::size_t k = 1; k <= 7; ++k) {
      double ca = compute_ca(m, k);
      ASSERT_GE(ca, prev);
      ASSERT_LE(ca, 1.0);
      prev = ca;
    }
  }
}

TEST(Bleu, IdenticalAndDisjoint) {
  std::vector<std::string> a = {"int", "f", "(", ")", "{", "return", "1", ";", "}"};
  EXPECT_DOUBLE_EQ(compute_bleu(a, a), 100.0);
  std::vector<std::string> b = {"fn", "g", "->", "i32"};
  EXPECT_EQ(compute_bleu(b, a), 0.0);
  try {
    compute_bleu(std::vector<std::string>{}, a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyInput);
  }
}

TEST(Bleu, MatchesSacrebleuFixture) {
  auto lines = util::split_lines(test::read_fixture("eval/bleu_sacrebleu.txt"));
  int checked = 0;
  for (const auto& line : lines) {
    if (line.empty()) continue;
    auto p1 = line.find('|');
    auto p2 = line.find('|', p1 + 1);
    auto cand = parse_ids(line.substr(0, p1));
    auto ref = parse_ids(line.substr(p1 + 1, p2 - p1 - 1));
    double expected = std::stod(line.substr(p2 + 1));
    EXPECT_NEAR(compute_bleu(cand, ref), expected, 1e-6) << line;
    ++checked;
  }
  EXPECT_GE(checked, 20);
}

TEST(Bleu, CorpusPoolsCounts) {
  std::vector<std::vector<int>> c = {{1, 2, 3, 4, 5}, {6, 7, 8, 9}};
  EXPECT_DOUBLE_EQ(compute_corpus_bleu(c, c), 100.0);
  EXPECT_EQ(compute_corpus_bleu({}, {}), 0.0);
  EXPECT_THROW(compute_corpus_bleu(c, {{1}}), Error);
}

TEST(Evaluate, ParseDirection) {
  EXPECT_EQ(parse_direction("cpp-rust"), (std::pair<std::string, std::string>{"cpp", "rust"}));
  EXPECT_THROW(parse_direction("cpp"), Error);
  EXPECT_THROW(parse_direction("-rust"), Error);
}

TEST(Evaluate, EmptyDirectionListIsEmptyReport) {
  auto r = evaluate(desk(), {}, nullptr, nullptr, 1, harness());
  EXPECT_TRUE(r.directions.empty());
  EXPECT_EQ(r.average_ca1(), 0.0);
}

TEST(Evaluate, ReferencesScoreOneAndMissingToolchainIsSkipped) {
  require("cpp");
  require("rust");
  EvalSet small;
  for (const char* p : {"add_two", "max_of_two", "gcd"}) {
    for (const char* lang : {"cpp", "rust"}) small.cases.push_back(*desk().find(p, lang));
  }
  small.cases.push_back({"add_two", "cobol", "x", "{{CANDIDATE}}"});
  auto oracle = [&](const EvalCase& source, std::string_view tgt, std::size_t) {
    return std::vector<std::string>{small.find(source.problem_id, tgt)->reference};
  };
  auto bytes = [](std::string_view s) { return tokenizer::encode(s, "", tokenizer::Vocab()).ids; };
  auto r = evaluate(small, {{"cpp", "rust"}, {"rust", "cpp"}, {"cpp", "cobol"}}, oracle, bytes, 1, harness());
  ASSERT_EQ(r.directions.size(), 3u);
  for (int i = 0; i < 2; ++i) {
    EXPECT_FALSE(r.directions[i].skipped);
    EXPECT_EQ(r.directions[i].ca1, 1.0);
    EXPECT_DOUBLE_EQ(r.directions[i].bleu, 100.0);
    EXPECT_EQ(r.directions[i].problems.size(), 3u);
  }
  EXPECT_TRUE(r.directions[2].skipped);
  EXPECT_EQ(r.average_ca1(), 1.0);
  EXPECT_NE(r.to_json().find("\"skipped\": true"), std::string::npos);
  EXPECT_NE(r.to_table().find("to rust"), std::string::npos);
}

TEST(Evaluate, HistogramCountsCompileErrors) {
  require("rust");
  EvalSet small;
  small.cases.push_back(*desk().find("add_two", "cpp"));
  small.cases.push_back(*desk().find("add_two", "rust"));
  auto broken = [](const EvalCase&, std::string_view, std::size_t) {
    return std::vector<std::string>{"fn add_two(a: i32, b: i32) -> i32 { \"s\" }", "fn add_two(a: i32, b: i32) -> i32 { a + b }"};
  };
  auto bytes = [](std::string_view s) { return tokenizer::encode(s, "", tokenizer::Vocab()).ids; };
  auto r = evaluate(small, {{"cpp", "rust"}}, broken, bytes, 2, harness());
  const auto& d = r.directions.at(0);
  EXPECT_EQ(d.ca1, 0.0);
  EXPECT_EQ(d.cak, 1.0);
  EXPECT_EQ(d.error_histogram.at("E0308"), 1u);
}

namespace {

translator::Model random_model() {
  nn::ModelConfig c;
  c.encoder_layers = 1;
  c.decoder_layers = 1;
  c.heads = 2;
  c.dim = 16;
  c.ffn_dim = 32;
  c.max_len = 32;
  c.vocab_size = static_cast<int>(tokenizer::Vocab().size());
  c.num_tags = 4;
  nn::Checkpoint ck;
  ck.model = nn::ModelState(c);
  ck.languages = {"cpp", "rust"};
  tokenizer::Vocab v;
  ck.vocab_text = v.to_text();
  ck.vocab_hash = v.hash();
  return translator::Model(std::move(ck));
}

}  // namespace

TEST(EmbeddingReport, SelfFirstAndSymmetric) {
  auto model = random_model();
  auto rep = embedding_report(model, "u", 10);
  ASSERT_EQ(rep.size(), 10u);
  EXPECT_EQ(rep[0].token, "u");
  EXPECT_EQ(rep[0].similarity, 1.0);
  for (std::size_t i = 1; i < rep.size(); ++i) {
    EXPECT_LE(rep[i].similarity, rep[i - 1].similarity);
    if (rep[i].similarity == rep[i - 1].similarity) EXPECT_GT(rep[i].id, rep[i - 1].id);
  }
  int u = *model.vocab().id_of("u");
  for (int j = 0; j < 40; ++j) {
    EXPECT_EQ(embedding_similarity(model.state(), u, j), embedding_similarity(model.state(), j, u));
  }
  EXPECT_EQ(embedding_report(model, "u", 10)[3].id, rep[3].id);
  EXPECT_EQ(embedding_report(model, "u", 100000).size(), model.vocab().size());
  int space = *model.vocab().id_of(" ");
  EXPECT_EQ(embedding_report(model, model.vocab().display(space), 1).at(0).id, space);
}

TEST(EmbeddingReport, UnknownToken) {
  auto model = random_model();
  try {
    embedding_report(model, "u32", 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownToken);
  }
}
