#include <benchmark/benchmark.h>

#include "irtrans/eval/harness.hpp"
#include "irtrans/frontends/record.hpp"
#include "irtrans/irnorm/normalize.hpp"
#include "irtrans/nn/model.hpp"
#include "irtrans/objectives/objectives.hpp"
#include "irtrans/tokenizer/bpe.hpp"
#include "irtrans/util/files.hpp"
#include "irtrans/util/rng.hpp"

using namespace irtrans;

namespace {

std::filesystem::path source_dir() { return IRTRANS_SOURCE_DIR; }

const std::vector<frontends::FunctionRecord>& fixtures() {
  static auto recs = [] {
    auto all = frontends::read_shard((source_dir() / "tests/fixtures/irnorm/frontend/cpp.para.jsonl").string());
    auto rust = frontends::read_shard((source_dir() / "tests/fixtures/irnorm/frontend/rust.para.jsonl").string());
    all.insert(all.end(), rust.begin(), rust.end());
    return all;
  }();
  return recs;
}

const tokenizer::Vocab& vocab() {
  static auto v = tokenizer::train_vocab(tokenizer::corpus_texts(source_dir() / "data/toy/corpus"), 400);
  return v;
}

nn::ModelConfig desk_model(int dim) {
  nn::ModelConfig c;
  c.dim = dim;
  c.ffn_dim = 4 * dim;
  c.max_len = 256;
  c.vocab_size = static_cast<int>(vocab().size());
  return c;
}

std::vector<int> random_ids(util::Rng& rng, int n, int vocab_size) {
  std::vector<int> ids = {tokenizer::Vocab::kBos};
  for (int i = 0; i < n; ++i) {
    ids.push_back(tokenizer::Vocab::kReserved + static_cast<int>(util::uniform_index(rng, vocab_size - tokenizer::Vocab::kReserved)));
  }
  ids.push_back(tokenizer::Vocab::kEos);
  return ids;
}

}  // namespace

static void BM_NormalizeFixtures(benchmark::State& state) {
  const auto& recs = fixtures();
  std::size_t bytes = 0;
  for (auto _ : state) {
    for (const auto& r : recs) {
      auto out = irnorm::normalize(*r.raw_ir, {});
      bytes += r.raw_ir->size();
      benchmark::DoNotOptimize(out);
    }
  }
  state.SetBytesProcessed(static_cast<int64_t>(bytes));
  state.counters["functions"] = static_cast<double>(recs.size());
}
BENCHMARK(BM_NormalizeFixtures)->Unit(benchmark::kMillisecond);

static void BM_TrainVocab(benchmark::State& state) {
  auto texts = tokenizer::corpus_texts(source_dir() / "data/toy/corpus");
  for (auto _ : state) {
    auto v = tokenizer::train_vocab(texts, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_TrainVocab)->Arg(400)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_Encode(benchmark::State& state) {
  const auto& recs = fixtures();
  std::size_t bytes = 0;
  for (auto _ : state) {
    for (const auto& r : recs) {
      auto ids = tokenizer::encode_ids(*r.normalized_ir, vocab());
      bytes += r.normalized_ir->size();
      benchmark::DoNotOptimize(ids);
    }
  }
  state.SetBytesProcessed(static_cast<int64_t>(bytes));
}
BENCHMARK(BM_Encode)->Unit(benchmark::kMillisecond);

// Forward + backward of one sequence pair (source length = target length = range(1)).
static void BM_SequenceLossBackward(benchmark::State& state) {
  nn::ModelState m(desk_model(static_cast<int>(state.range(0))));
  util::Rng rng(3);
  int len = static_cast<int>(state.range(1));
  auto src = nn::ModelInput::uniform(random_ids(rng, len, m.config().vocab_size), 0);
  auto tgt = random_ids(rng, len, m.config().vocab_size);
  nn::Gradients g(m.params().size(), 0.0);
  for (auto _ : state) {
    auto r = nn::sequence_loss(m, src, tgt, 1, &g);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * 2 * len);
}
BENCHMARK(BM_SequenceLossBackward)->Args({32, 40})->Args({64, 40})->Args({64, 120})->Unit(benchmark::kMillisecond);

static void BM_GreedyDecode(benchmark::State& state) {
  nn::ModelState m(desk_model(64));
  util::Rng rng(4);
  auto src = nn::ModelInput::uniform(random_ids(rng, 40, m.config().vocab_size), 0);
  for (auto _ : state) {
    auto out = nn::greedy_decode(m, src, 1, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_GreedyDecode)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_BeamDecode(benchmark::State& state) {
  nn::ModelState m(desk_model(64));
  util::Rng rng(4);
  auto src = nn::ModelInput::uniform(random_ids(rng, 40, m.config().vocab_size), 0);
  for (auto _ : state) {
    auto out = nn::beam_decode(m, src, 1, static_cast<int>(state.range(0)), 32);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_BeamDecode)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_CorruptSequence(benchmark::State& state) {
  util::Rng rng(5);
  auto ids = random_ids(rng, 200, 400);
  objectives::NoiseConfig cfg;
  for (auto _ : state) {
    auto out = objectives::corrupt_sequence(ids, cfg, rng);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(ids.size()));
}
BENCHMARK(BM_CorruptSequence);

static void BM_Bleu(benchmark::State& state) {
  util::Rng rng(6);
  auto a = random_ids(rng, static_cast<int>(state.range(0)), 60);
  auto b = random_ids(rng, static_cast<int>(state.range(0)), 60);
  for (auto _ : state) benchmark::DoNotOptimize(eval::compute_bleu(a, b));
}
BENCHMARK(BM_Bleu)->Arg(100)->Arg(1000);
BENCHMARK_MAIN();
