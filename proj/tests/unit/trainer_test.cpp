#include <gtest/gtest.h>

#include <map>

#include "irtrans/error.hpp"
#include "irtrans/trainer/trainer.hpp"
#include "irtrans/util/files.hpp"
#include "test_support.hpp"

using namespace irtrans;
using namespace irtrans::trainer;
using objectives::Objective;

namespace {

frontends::FunctionRecord record(const std::string& lang, const std::string& src, const std::string& ir) {
  frontends::FunctionRecord r;
  r.id = lang + src;
  r.language = lang;
  r.source = src;
  r.normalized_ir = ir;
  r.compile_status = frontends::CompileStatus::kOk;
  return r;
}

TrainData small_data() {
  std::vector<frontends::FunctionRecord> recs = {
      record("cpp", "a+b", "add a b"), record("cpp", "a*b", "mul a b"),
      record("rust", "a-b", "sub a b"), record("rust", "a&b", "and a b")};
  return TrainData::from_records(recs, recs, tokenizer::Vocab(), frontends::LanguageSet({"cpp", "rust"}));
}

nn::ModelConfig tiny() {
  nn::ModelConfig c;
  c.encoder_layers = 1;
  c.decoder_layers = 1;
  c.heads = 2;
  c.dim = 16;
  c.ffn_dim = 32;
  c.max_len = 32;
  return c;
}

TrainConfig quick(std::uint64_t steps) {
  TrainConfig c;
  c.objectives = {Objective::kMLM, Objective::kAE, Objective::kBT, Objective::kTLM, Objective::kTAE, Objective::kIRGen};
  c.steps = steps;
  c.batch_size = 2;
  c.learning_rate = 1e-2;
  c.warmup_steps = 5;
  c.bt_max_new = 8;
  return c;
}

}  // namespace

TEST(Schedule, SingleObjectiveIsConstant) {
  for (std::uint64_t k = 0; k < 20; ++k) EXPECT_EQ(schedule(k, {Objective::kAE}), Objective::kAE);
}

TEST(Schedule, EqualCountsPerWindow) {
  std::vector<Objective> objs = {Objective::kMLM, Objective::kAE, Objective::kBT};
  for (std::uint64_t start = 0; start < 5; ++start) {
    std::map<Objective, int> counts;
    for (std::uint64_t k = start; k < start + 9; ++k) counts[schedule(k, objs)]++;
    for (auto o : objs) EXPECT_EQ(counts[o], 3);
  }
  EXPECT_THROW(schedule(0, {}), Error);
}

TEST(Schedule, GoldenTrace) {
  std::vector<Objective> objs = {Objective::kMLM, Objective::kAE,  Objective::kBT,
                                 Objective::kTLM, Objective::kTAE, Objective::kIRGen};
  auto lines = util::split_lines(test::read_fixture("trainer/schedule_6x100.txt"));
  ASSERT_GE(lines.size(), 100u);
  for (std::uint64_t k = 0; k < 100; ++k) EXPECT_EQ(objectives::objective_name(schedule(k, objs)), lines[k]);
}

TEST(LearningRate, InverseSqrtWithWarmup) {
  TrainConfig c;
  c.learning_rate = 1e-3;
  c.warmup_steps = 200;
  EXPECT_EQ(lr_at(0, c), 0.0);
  EXPECT_DOUBLE_EQ(lr_at(200, c), 1e-3);
  EXPECT_DOUBLE_EQ(lr_at(800, c), 5e-4);
  EXPECT_DOUBLE_EQ(lr_at(100, c), 5e-4);
  for (std::uint64_t s = 200; s < 5000; ++s) ASSERT_LE(lr_at(s + 1, c), lr_at(s, c));
  for (std::uint64_t s = 1; s < 200; ++s) ASSERT_LT(lr_at(s, c), lr_at(s + 1, c));
  c.warmup_steps = 0;
  EXPECT_DOUBLE_EQ(lr_at(4, c), 5e-4);
}

TEST(TrainConfig, ReadsIniSections) {
  auto f = util::ConfigFile::parse(
      "[train]\nobjectives = MLM, TLM ,Decomp\nsteps = 42\nlearning_rate = 0.002\npivot_mode = true\n"
      "[noise]\nae_mask_rate = 0.3\nshuffle_window = 0\n[model]\ndim = 32\nseparate_decoders = true\n");
  auto c = train_config_from(f);
  EXPECT_EQ(c.objectives, (std::vector<Objective>{Objective::kMLM, Objective::kTLM, Objective::kDecomp}));
  EXPECT_EQ(c.steps, 42u);
  EXPECT_DOUBLE_EQ(c.learning_rate, 0.002);
  EXPECT_EQ(c.batch_size, 8u);
  EXPECT_TRUE(c.pivot_mode);
  EXPECT_DOUBLE_EQ(c.noise.ae_mask_rate, 0.3);
  EXPECT_EQ(c.noise.shuffle_window, 0);
  EXPECT_EQ(c.effective_objectives(), (std::vector<Objective>{Objective::kMLM, Objective::kTLM, Objective::kDecomp,
                                                               Objective::kIRGen, Objective::kPivotBT}));
  auto m = model_config_from(f);
  EXPECT_EQ(m.dim, 32);
  EXPECT_TRUE(m.separate_decoders);
  EXPECT_THROW(train_config_from(util::ConfigFile::parse("[train]\nobjectives = DOBF\n")), Error);
}

TEST(TrainConfig, Validation) {
  TrainConfig c;
  c.objectives.clear();
  EXPECT_THROW(c.validate(2), Error);
  c = TrainConfig{};
  EXPECT_THROW(c.validate(1), Error);  // BT with one language
  c.objectives = {Objective::kMLM};
  EXPECT_NO_THROW(c.validate(1));
}

TEST(Train, ZeroStepsWritesInitialCheckpointOnly) {
  util::TempDir dir;
  auto data = small_data();
  TrainOptions opt;
  opt.out_dir = dir.path();
  auto res = train(data, quick(0), tiny(), opt);
  EXPECT_TRUE(res.log.steps.empty());
  ASSERT_EQ(res.log.checkpoints.size(), 1u);
  EXPECT_EQ(res.checkpoint.step, 0u);
  auto loaded = nn::load_checkpoint(dir.path() / "last.ckpt");
  EXPECT_EQ(loaded.model, nn::ModelState(res.checkpoint.model.config()));
  EXPECT_EQ(loaded.model.config().vocab_size, static_cast<int>(data.vocab.size()));
  EXPECT_EQ(loaded.model.config().num_tags, 4);
}

TEST(Train, SeededRunsAreBitwiseIdentical) {
  auto data = small_data();
  auto a = train(data, quick(12), tiny());
  auto b = train(data, quick(12), tiny());
  EXPECT_EQ(nn::serialize_checkpoint(a.checkpoint), nn::serialize_checkpoint(b.checkpoint));
  auto other = quick(12);
  other.seed = 2;
  auto c = train(data, other, tiny());
  EXPECT_NE(c.checkpoint.model.params(), a.checkpoint.model.params());
}

TEST(Train, ResumeEqualsStraightThrough) {
  util::TempDir dir;
  auto data = small_data();
  auto straight = train(data, quick(12), tiny());
  TrainOptions opt;
  opt.out_dir = dir.path();
  auto cfg = quick(12);
  cfg.checkpoint_interval = 5;
  cfg.steps = 7;
  train(data, cfg, tiny(), opt);
  cfg.steps = 12;
  opt.resume_from = dir.path() / "checkpoint-000005.ckpt";
  auto resumed = train(data, cfg, tiny(), opt);
  EXPECT_EQ(resumed.checkpoint.model.params(), straight.checkpoint.model.params());
  EXPECT_EQ(resumed.checkpoint.optimizer, straight.checkpoint.optimizer);
  // The log was cut back to step 5 before appending.
  std::uint64_t last = 0;
  for (const auto& line : util::split_lines(util::read_file(dir.path() / "train_log.jsonl"))) {
    if (line.find("\"objective\"") == std::string::npos) continue;
    auto pos = line.find("\"step\":");
    auto step = std::stoull(line.substr(pos + 7));
    EXPECT_GT(step, last);
    last = step;
  }
  EXPECT_EQ(last, 12u);
}

TEST(Train, ResumeWithOtherVocabularyIsRejected) {
  util::TempDir dir;
  auto data = small_data();
  TrainOptions opt;
  opt.out_dir = dir.path();
  train(data, quick(1), tiny(), opt);
  auto other = data;
  other.vocab.add_merge(*other.vocab.byte_id('a'), *other.vocab.byte_id('+'));
  opt.resume_from = dir.path() / "last.ckpt";
  try {
    train(other, quick(2), tiny(), opt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCheckpointMismatch);
  }
}

TEST(Train, IrObjectiveWithoutParallelDataIsMissingIr) {
  auto data = small_data();
  data.parallel.clear();
  try {
    train(data, quick(1), tiny());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingIR);
  }
}

TEST(Train, LogIsStrictlyIncreasingAndLossDrops) {
  auto data = small_data();
  auto cfg = quick(240);
  cfg.objectives = {Objective::kIRGen, Objective::kDecomp};
  auto res = train(data, cfg, tiny());
  ASSERT_EQ(res.log.steps.size(), 240u);
  double early = 0, late = 0;
  for (std::size_t i = 0; i < 240; ++i) {
    EXPECT_EQ(res.log.steps[i].step, i + 1);
    if (i < 20) early += res.log.steps[i].loss;
    if (i >= 220) late += res.log.steps[i].loss;
  }
  EXPECT_LT(late, early / 4);
}

TEST(Train, DecompMemorizesPairs) {
  auto data = small_data();
  auto cfg = quick(800);
  cfg.objectives = {Objective::kDecomp};
  cfg.batch_size = 4;
  auto res = train(data, cfg, tiny());
  objectives::ObjectiveContext ctx;
  ctx.languages = &data.languages;
  ctx.max_len = 32;
  util::Rng rng(1);
  for (const auto& r : data.parallel) {
    auto ex = objectives::build_example(Objective::kDecomp, r, ctx, rng);
    EXPECT_LT(objectives::example_loss(res.checkpoint.model, ex).loss, 0.01);
  }
}
