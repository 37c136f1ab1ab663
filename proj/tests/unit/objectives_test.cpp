#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "irtrans/error.hpp"
#include "irtrans/objectives/objectives.hpp"
#include "oracles/finite_difference.hpp"

using namespace irtrans;
using namespace irtrans::objectives;
using tokenizer::Vocab;

namespace {

std::vector<int> ordinary(int n, int first = 20) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = first + i % 20;
  return v;
}

NoiseConfig zero_noise() {
  NoiseConfig c;
  c.ae_mask_rate = 0;
  c.token_drop_rate = 0;
  c.shuffle_window = 0;
  return c;
}

nn::ModelConfig tiny() {
  nn::ModelConfig c;
  c.encoder_layers = 1;
  c.decoder_layers = 1;
  c.heads = 2;
  c.dim = 16;
  c.ffn_dim = 32;
  c.max_len = 64;
  c.vocab_size = 40;
  c.num_tags = 4;
  c.seed = 17;
  return c;
}

struct Fixture {
  frontends::LanguageSet langs{{"cpp", "rust"}};
  ObjectiveContext ctx;
  EncodedRecord rec;
  Fixture() {
    ctx.languages = &langs;
    ctx.vocab_size = 40;
    ctx.max_len = 64;
    ctx.bt_max_new = 10;
    rec.language = 1;
    rec.code = {20, 21, 22, 23, 24, 25, 26};
    rec.ir = std::vector<int>{30, 31, 32, 33, 34, 35, 36, 37, 38};
  }
};

}  // namespace

TEST(ObjectiveNames, RoundTrip) {
  for (auto o : {Objective::kMLM, Objective::kAE, Objective::kBT, Objective::kTLM, Objective::kTAE, Objective::kIRGen,
                 Objective::kDecomp, Objective::kPivotBT}) {
    EXPECT_EQ(parse_objective(objective_name(o)), o);
  }
  EXPECT_THROW(parse_objective("DOBF"), Error);
}

TEST(MaskTokens, RateZeroAndOne) {
  util::Rng rng(1);
  std::vector<int> ids = {1, 20, 21, 22, 4, 23, 2};
  auto none = mask_tokens(ids, 0.0, rng);
  EXPECT_EQ(none.ids, ids);
  EXPECT_TRUE(none.positions.empty());
  auto all = mask_tokens(ids, 1.0, rng);
  EXPECT_EQ(all.ids, (std::vector<int>{1, 3, 3, 3, 4, 3, 2}));
  EXPECT_EQ(all.positions, (std::vector<int>{1, 2, 3, 5}));
}

TEST(MaskTokens, EmpiricalRate) {
  util::Rng rng(2);
  auto ids = ordinary(100000);
  auto r = mask_tokens(ids, 0.15, rng);
  double rate = static_cast<double>(r.positions.size()) / 1e5;
  EXPECT_NEAR(rate, 0.15, 0.01);
  EXPECT_EQ(std::count(r.ids.begin(), r.ids.end(), Vocab::kMask), static_cast<long>(r.positions.size()));
}

TEST(MaskTokens, RandomReplacementSplit) {
  util::Rng rng(3);
  auto ids = ordinary(100000);
  auto r = mask_tokens(ids, 1.0, rng, true, 40);
  std::size_t masks = 0, same = 0;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    masks += r.ids[i] == Vocab::kMask;
    same += r.ids[i] == ids[i];
    ASSERT_TRUE(r.ids[i] == Vocab::kMask || (r.ids[i] >= Vocab::kReserved && r.ids[i] < 40));
  }
  EXPECT_NEAR(masks / 1e5, 0.8, 0.01);
  // unchanged: 10% kept plus 1/24 of the random 10%
  EXPECT_NEAR(same / 1e5, 0.1 + 0.1 / 24, 0.01);
}

TEST(CorruptSequence, ZeroNoiseIsIdentity) {
  util::Rng rng(4);
  std::vector<int> ids = {1, 20, 21, 22, 4, 23, 24, 2};
  EXPECT_EQ(corrupt_sequence(ids, zero_noise(), rng), ids);
}

TEST(CorruptSequence, ShuffleIsBoundedPermutation) {
  for (int w : {1, 2, 3, 7}) {
    auto cfg = zero_noise();
    cfg.shuffle_window = w;
    util::Rng rng(static_cast<std::uint64_t>(w));
    std::vector<int> ids(200);
    for (int i = 0; i < 200; ++i) ids[static_cast<std::size_t>(i)] = 16 + i;
    auto out = corrupt_sequence(ids, cfg, rng);
    ASSERT_EQ(out.size(), ids.size());
    EXPECT_NE(out, ids);
    for (std::size_t pos = 0; pos < out.size(); ++pos) {
      int origin = out[pos] - 16;
      EXPECT_LE(std::abs(origin - static_cast<int>(pos)), w);
    }
    auto sorted = out;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, ids);
  }
}

TEST(CorruptSequence, SpanMaskCoverage) {
  auto cfg = zero_noise();
  cfg.ae_mask_rate = 0.2;
  util::Rng rng(5);
  std::size_t masked = 0, total = 0;
  for (int k = 0; k < 1000; ++k) {
    auto ids = ordinary(100);
    auto out = corrupt_sequence(ids, cfg, rng);
    masked += static_cast<std::size_t>(std::count(out.begin(), out.end(), Vocab::kMask));
    total += ids.size();
  }
  EXPECT_NEAR(static_cast<double>(masked) / static_cast<double>(total), 0.20, 0.01);
}

TEST(CorruptSequence, SpecialsStayInPlace) {
  NoiseConfig cfg;
  util::Rng rng(6);
  std::vector<int> ids = {1, 20, 21, 22, 23, 24, 25, 4, 30, 31, 32, 33, 2};
  auto out = corrupt_sequence(ids, cfg, rng);
  EXPECT_EQ(out.front(), 1);
  EXPECT_EQ(out.back(), 2);
  EXPECT_EQ(std::count(out.begin(), out.end(), Vocab::kSep), 1);
}

// Frozen from tests/oracles/corrupt.py 42 (independent mt19937_64 and
// corruption code).
TEST(CorruptSequence, SeededGolden) {
  std::vector<int> ids = {1};
  for (int i = 20; i < 60; ++i) ids.push_back(i);
  ids.push_back(4);
  for (int i = 100; i < 125; ++i) ids.push_back(i);
  ids.push_back(2);
  NoiseConfig cfg;
  util::Rng rng(42);
  std::vector<int> golden = {1,   21,  20,  3,   3,   24,  26,  27,  28,  29,  3,   3,   32,  33,  35,  36,
                             37,  38,  41,  3,   43,  44,  42,  45,  46,  47,  48,  49,  50,  53,  3,   3,
                             3,   57,  58,  59,  4,   101, 100, 102, 106, 103, 104, 108, 105, 109, 107, 110,
                             111, 112, 113, 115, 114, 3,   3,   3,   3,   121, 3,   123, 124, 2};
  EXPECT_EQ(corrupt_sequence(ids, cfg, rng), golden);
}

TEST(NoiseConfig, Validation) {
  NoiseConfig c;
  c.ae_mask_rate = 1.5;
  EXPECT_THROW(c.validate(), Error);
  c = {};
  c.span_length_mean = 0;
  EXPECT_THROW(c.validate(), Error);
  c = {};
  c.shuffle_window = -1;
  EXPECT_THROW(c.validate(), Error);
}

TEST(ConcatWithIr, Layout) {
  auto p = concat_with_ir({20, 21, 22}, {30, 31}, 0, 2, 64);
  EXPECT_EQ(p.ids, (std::vector<int>{1, 20, 21, 22, 4, 30, 31, 2}));
  EXPECT_EQ(p.boundary, 4u);
  EXPECT_EQ(p.tags, (std::vector<int>{0, 0, 0, 0, 2, 2, 2, 2}));
  auto empty = concat_with_ir({20}, {}, 0, 2, 64);
  EXPECT_EQ(empty.ids, (std::vector<int>{1, 20, 4, 2}));
  EXPECT_EQ(empty.boundary, 2u);
  try {
    concat_with_ir(ordinary(40), ordinary(30), 0, 2, 64);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSequenceTooLong);
  }
}

TEST(BuildExample, TagLayout) {
  Fixture f;
  util::Rng rng(7);
  auto irgen = build_example(Objective::kIRGen, f.rec, f.ctx, rng);
  EXPECT_EQ(irgen.input.tags, std::vector<int>(9, 1));
  EXPECT_EQ(irgen.target_tag, 3);
  EXPECT_EQ(irgen.target.front(), Vocab::kBos);
  auto decomp = build_example(Objective::kDecomp, f.rec, f.ctx, rng);
  EXPECT_EQ(decomp.input.tags, std::vector<int>(11, 3));
  EXPECT_EQ(decomp.target_tag, 1);
  auto tae = build_example(Objective::kTAE, f.rec, f.ctx, rng);
  EXPECT_EQ(tae.target, concat_with_ir(f.rec.code, *f.rec.ir, 1, 3, 64).ids);
}

TEST(BuildExample, MissingIr) {
  Fixture f;
  f.rec.ir.reset();
  util::Rng rng(8);
  for (auto o : {Objective::kTLM, Objective::kTAE, Objective::kIRGen, Objective::kDecomp}) {
    try {
      build_example(o, f.rec, f.ctx, rng);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kMissingIR);
    }
  }
  EXPECT_NO_THROW(build_example(Objective::kAE, f.rec, f.ctx, rng));
}

TEST(BuildExample, BtNeedsTwoLanguages) {
  Fixture f;
  frontends::LanguageSet one({"cpp"});
  f.ctx.languages = &one;
  f.rec.language = 0;
  nn::ModelState m(tiny());
  util::Rng rng(9);
  EXPECT_THROW(build_example(Objective::kBT, f.rec, f.ctx, rng, &m), Error);
}

TEST(ObjectiveStep, TlmRateZeroIsEmptyMaskSet) {
  Fixture f;
  f.ctx.noise.mlm_mask_rate = 0.0;
  nn::ModelState m(tiny());
  util::Rng rng(10);
  try {
    objective_step(Objective::kTLM, std::vector<EncodedRecord>{f.rec}, m, f.ctx, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyMaskSet);
  }
}

TEST(ObjectiveStep, MissingIrFromFunctionRecords) {
  Fixture f;
  nn::ModelState m(tiny());
  frontends::FunctionRecord r;
  r.language = "cpp";
  r.source = "int f();";
  util::Rng rng(11);
  try {
    objective_step(Objective::kIRGen, std::vector<frontends::FunctionRecord>{r}, m, Vocab(), f.ctx, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingIR);
  }
}

// Each objective equals its equation composed from the public operations
// with the same rng stream.
TEST(ObjectiveStep, EquationFidelity) {
  Fixture f;
  nn::ModelState m(tiny());
  std::vector<int> xs = {1, 20, 21, 22, 23, 24, 25, 26, 2};
  std::vector<int> zs = {1, 30, 31, 32, 33, 34, 35, 36, 37, 38, 2};
  auto step = [&](Objective o, std::uint64_t seed) {
    util::Rng rng(seed);
    return objective_step(o, std::vector<EncodedRecord>{f.rec}, m, f.ctx, rng).loss;
  };
  {
    util::Rng rng(100);
    auto masked = mask_tokens(xs, 0.15, rng);
    ASSERT_FALSE(masked.positions.empty());
    EXPECT_EQ(step(Objective::kMLM, 100), nn::masked_lm_loss(m, nn::ModelInput::uniform(masked.ids, 1), xs, masked.positions).loss);
  }
  {
    util::Rng rng(101);
    auto noisy = corrupt_sequence(xs, f.ctx.noise, rng);
    EXPECT_EQ(step(Objective::kAE, 101), nn::sequence_loss(m, nn::ModelInput::uniform(noisy, 1), xs, 1).loss);
  }
  {
    util::Rng rng(102);
    auto nx = corrupt_sequence(f.rec.code, f.ctx.noise, rng);
    auto nz = corrupt_sequence(*f.rec.ir, f.ctx.noise, rng);
    auto in = concat_with_ir(nx, nz, 1, 3, 64);
    auto tgt = concat_with_ir(f.rec.code, *f.rec.ir, 1, 3, 64);
    EXPECT_EQ(step(Objective::kTAE, 102), nn::sequence_loss(m, in.input(), tgt.ids, 1).loss);
  }
  {
    util::Rng rng(103);
    auto pair = concat_with_ir(f.rec.code, *f.rec.ir, 1, 3, 64);
    auto masked = mask_tokens(pair.ids, 0.15, rng);
    ASSERT_FALSE(masked.positions.empty());
    EXPECT_EQ(step(Objective::kTLM, 103), nn::masked_lm_loss(m, {masked.ids, pair.tags}, pair.ids, masked.positions).loss);
  }
  EXPECT_EQ(step(Objective::kIRGen, 104), nn::sequence_loss(m, nn::ModelInput::uniform(xs, 1), zs, 3).loss);
  EXPECT_EQ(step(Objective::kDecomp, 105), nn::sequence_loss(m, nn::ModelInput::uniform(zs, 3), xs, 1).loss);
  {
    auto y = nn::greedy_decode(m, nn::ModelInput::uniform(xs, 1), 0, 10);
    EXPECT_EQ(step(Objective::kBT, 106), nn::sequence_loss(m, nn::ModelInput::uniform(y, 0), xs, 1).loss);
    auto zhat = nn::greedy_decode(m, nn::ModelInput::uniform(xs, 1), 2, 10);
    EXPECT_EQ(step(Objective::kPivotBT, 107), nn::sequence_loss(m, nn::ModelInput::uniform(zhat, 2), xs, 1).loss);
  }
}

// The BT gradient is that of the reconstruction step with the generated
// input held fixed: generation contributes nothing.
TEST(ObjectiveStep, BackTranslationGradientIsBlocked) {
  Fixture f;
  nn::ModelState m(tiny());
  util::Rng a(12), b(12);
  auto g1 = nn::zero_gradients(m);
  objective_step(Objective::kBT, std::vector<EncodedRecord>{f.rec}, m, f.ctx, a, &g1);
  auto ex = build_example(Objective::kBT, f.rec, f.ctx, b, &m);
  auto g2 = nn::zero_gradients(m);
  example_loss(m, ex, &g2);
  EXPECT_EQ(g1, g2);
  // Generating with perturbed parameters that still produce the same input
  // gives the same gradient: generation enters only through its token ids.
  nn::ModelState p = m;
  auto lang = p.tensor(p.lang_emb);
  lang.row(0).array() += 1e-9;
  util::Rng c(12);
  auto ex2 = build_example(Objective::kBT, f.rec, f.ctx, c, &p);
  ASSERT_EQ(ex2.input, ex.input);
  auto g3 = nn::zero_gradients(m);
  example_loss(m, ex2, &g3);
  EXPECT_EQ(g3, g2);
}

TEST(ObjectiveStep, BatchIsMeanOfExamples) {
  Fixture f;
  nn::ModelState m(tiny());
  EncodedRecord other = f.rec;
  other.language = 0;
  other.code = {27, 28, 29};
  util::Rng rng(13);
  auto g = nn::zero_gradients(m);
  auto rep = objective_step(Objective::kIRGen, std::vector<EncodedRecord>{f.rec, other}, m, f.ctx, rng, &g);
  util::Rng r2(13);
  double a = example_loss(m, build_example(Objective::kIRGen, f.rec, f.ctx, r2)).loss;
  double b = example_loss(m, build_example(Objective::kIRGen, other, f.ctx, r2)).loss;
  EXPECT_NEAR(rep.loss, (a + b) / 2, 1e-12);
  EXPECT_GT(rep.grad_norm, 0.0);
}

class ObjectiveGradients : public ::testing::TestWithParam<Objective> {};

TEST_P(ObjectiveGradients, FiniteDifference) {
  Fixture f;
  nn::ModelState m(tiny());
  util::Rng rng(static_cast<std::uint64_t>(GetParam()) + 50);
  auto ex = build_example(GetParam(), f.rec, f.ctx, rng, &m);
  auto res = oracle::check_gradients(
      m, [&](const nn::ModelState& s, nn::Gradients* g) { return example_loss(s, ex, g).loss; }, 100,
      static_cast<std::uint64_t>(GetParam()));
  EXPECT_LT(res.max_rel_error, 1e-3) << objective_name(GetParam());
  EXPECT_EQ(res.coordinates, 100);
}

INSTANTIATE_TEST_SUITE_P(All, ObjectiveGradients,
                         ::testing::Values(Objective::kMLM, Objective::kAE, Objective::kBT, Objective::kTLM,
                                           Objective::kTAE, Objective::kIRGen, Objective::kDecomp,
                                           Objective::kPivotBT),
                         [](const auto& info) { return std::string(objective_name(info.param)); });
