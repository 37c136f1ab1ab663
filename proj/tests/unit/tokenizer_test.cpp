#include <gtest/gtest.h>

#include <map>
#include <random>

#include "irtrans/error.hpp"
#include "irtrans/tokenizer/bpe.hpp"
#include "test_support.hpp"

using namespace irtrans;
using namespace irtrans::tokenizer;

namespace {

std::vector<std::string> fixture_corpus() { return util::split_lines(test::read_fixture("tokenizer/corpus.txt")); }

}  // namespace

TEST(Vocab, ReservedIdsDistinctAndSmall) {
  std::set<int> ids = {Vocab::kPad, Vocab::kBos, Vocab::kEos, Vocab::kMask, Vocab::kSep};
  EXPECT_EQ(ids.size(), 5u);
  for (int id : ids) EXPECT_LT(id, 16);
}

TEST(TrainVocab, SingleRepeatedCharacter) {
  auto v = train_vocab({"a", "a", "a", "a"}, 64, false);
  ASSERT_EQ(v.size(), static_cast<std::size_t>(Vocab::kReserved) + 1);
  EXPECT_EQ(v.token(Vocab::kReserved), "a");
}

TEST(TrainVocab, Deterministic) {
  auto corpus = fixture_corpus();
  EXPECT_EQ(train_vocab(corpus, 320).to_text(), train_vocab(corpus, 320).to_text());
}

TEST(TrainVocab, EmptyCorpus) {
  try {
    train_vocab({"", ""}, 512);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyCorpus);
  }
}

TEST(TrainVocab, FirstMergeIsMostFrequentPair) {
  auto corpus = fixture_corpus();
  // Brute force: count adjacent byte pairs inside whitespace-led chunks.
  std::map<std::pair<unsigned char, unsigned char>, long> counts;
  for (const auto& line : corpus) {
    for (auto chunk : pretokenize(line)) {
      for (std::size_t i = 0; i + 1 < chunk.size(); ++i) {
        ++counts[{static_cast<unsigned char>(chunk[i]), static_cast<unsigned char>(chunk[i + 1])}];
      }
    }
  }
  std::pair<unsigned char, unsigned char> best{};
  long best_count = -1;
  for (const auto& [pair, count] : counts) {
    if (count > best_count) {  // map order gives the smallest pair on ties
      best = pair;
      best_count = count;
    }
  }
  auto v = train_vocab(corpus, 273);
  ASSERT_EQ(v.merges().size(), 1u);
  std::string expected{static_cast<char>(best.first), static_cast<char>(best.second)};
  EXPECT_EQ(v.token(v.merges()[0].result), expected);
}

TEST(Encode, EmptyText) {
  auto v = train_vocab(fixture_corpus(), 300);
  EXPECT_EQ(encode("", "cpp", v).ids, (std::vector<int>{Vocab::kBos, Vocab::kEos}));
}

TEST(Encode, RoundTripOnCorpusSamples) {
  auto corpus = fixture_corpus();
  auto v = train_vocab(corpus, 400);
  std::mt19937_64 rng(7);
  std::string all;
  for (const auto& l : corpus) all += l + "\n";
  for (int i = 0; i < 1000; ++i) {
    auto a = std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng);
    auto len = std::uniform_int_distribution<std::size_t>(0, 80)(rng);
    auto sample = all.substr(a, len);
    auto seq = encode(sample, "cpp", v);
    ASSERT_EQ(decode(seq, v), sample);
    for (std::size_t k = 1; k + 1 < seq.ids.size(); ++k) ASSERT_FALSE(v.is_special(seq.ids[k]));
  }
}

TEST(Encode, ArbitraryBytesWithFallback) {
  auto v = train_vocab(fixture_corpus(), 300);
  std::string bytes;
  for (int b = 0; b < 256; ++b) bytes += static_cast<char>(b);
  EXPECT_EQ(decode(encode(bytes, "cpp", v), v), bytes);
}

TEST(Encode, UnknownByteWithoutFallback) {
  auto v = train_vocab({"aab aab"}, 64, false);
  try {
    encode("z", "cpp", v);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownByte);
  }
}

// Golden ids computed by tests/oracles/bpe_encode.py from the committed vocab.
TEST(Encode, GoldenIdsUnderCommittedVocab) {
  auto v = Vocab::load(test::fixture("tokenizer/vocab.txt"));
  auto seq = encode("int max(int a, int b) { return a > b ? a : b; }", "cpp", v);
  std::vector<int> golden = {1, 280, 287, 289, 283, 292, 285, 293, 279, 297, 273,
                             48, 78, 274, 48, 79, 273, 298, 294, 281, 2};
  EXPECT_EQ(seq.ids, golden);
}

TEST(Vocab, TextRoundTripAndHash) {
  auto v = train_vocab(fixture_corpus(), 350);
  auto w = Vocab::from_text(v.to_text());
  EXPECT_EQ(w.to_text(), v.to_text());
  EXPECT_EQ(w.hash(), v.hash());
  EXPECT_EQ(w.size(), v.size());
  auto small = train_vocab(fixture_corpus(), 300);
  EXPECT_NE(small.hash(), v.hash());
}
