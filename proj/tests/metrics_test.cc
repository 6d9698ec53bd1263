//
// Copyright 2026 The Orthonoise Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "orthonoise/metrics.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.h"

namespace orthonoise {
namespace {

Words W(std::initializer_list<const char*> words) {
  return Words(words.begin(), words.end());
}

TEST(EditDistanceTest, Examples) {
  EXPECT_EQ(WordEditDistance(W({"a", "b", "c", "d"}), W({"a", "b", "c", "d"})), 0);
  EXPECT_EQ(WordEditDistance(W({"a", "b", "c", "d"}), W({"a", "b", "x", "d"})), 1);
  EXPECT_EQ(WordEditDistance(W({}), W({"a", "b"})), 2);
  EXPECT_EQ(WordEditDistance(W({"A"}), W({"a"})), 1);
}

TEST(EditDistanceTest, MatchesRecursiveOracle) {
  std::mt19937 gen(3);
  for (int i = 0; i < 3000; ++i) {
    Words a, b;
    for (int k = 0, n = gen() % 8; k < n; ++k) a.push_back(std::string(1, 'a' + gen() % 4));
    for (int k = 0, n = gen() % 8; k < n; ++k) b.push_back(std::string(1, 'a' + gen() % 4));
    ASSERT_EQ(WordEditDistance(a, b), testing::RecursiveEditDistance(a, b));
  }
}

TEST(TerTest, Examples) {
  const TerScore same = Ter(W({"a", "b"}), W({"a", "b"}));
  EXPECT_EQ(same.edits, 0);
  EXPECT_EQ(same.score, 0.0);

  const TerScore rotated = Ter(W({"d", "a", "b", "c"}), W({"a", "b", "c", "d"}));
  EXPECT_EQ(rotated.shifts, 1);
  EXPECT_EQ(rotated.edits, 1);
  EXPECT_DOUBLE_EQ(rotated.score, 0.25);

  const TerScore sub = Ter(W({"a", "x", "c"}), W({"a", "b", "c"}));
  EXPECT_EQ(sub.shifts, 0);
  EXPECT_EQ(sub.edits, 1);
  EXPECT_DOUBLE_EQ(sub.score, 1.0 / 3);

  EXPECT_THROW(Ter(W({"a"}), W({})), MetricError);
  EXPECT_EQ(Ter(W({}), W({"a", "b"})).edits, 2);
}

TEST(TerTest, ScoreMayExceedOne) {
  const TerScore s = Ter(W({"x", "y", "z", "w"}), W({"a", "b"}));
  EXPECT_EQ(s.edits, 4);
  EXPECT_DOUBLE_EQ(s.score, 2.0);
}

TEST(TerTest, BlockShiftCountsOnce) {
  // Moving a three-word block costs one shift.
  const TerScore s = Ter(W({"d", "e", "f", "a", "b", "c"}),
                         W({"a", "b", "c", "d", "e", "f"}));
  EXPECT_EQ(s.shifts, 1);
  EXPECT_EQ(s.edits, 1);
}

TEST(TerTest, SpanLimitIsRespected) {
  const Words hyp = W({"d", "e", "f", "a", "b", "c"});
  const Words ref = W({"a", "b", "c", "d", "e", "f"});
  TerOptions narrow;
  narrow.max_shift_span = 1;
  const TerScore s = Ter(hyp, ref, narrow);
  EXPECT_GT(s.edits, 1);
  EXPECT_LE(s.edits, WordEditDistance(hyp, ref));
}

TEST(TerTest, FormatLine) {
  EXPECT_EQ(FormatTerLine(Ter(W({"a", "x", "c"}), W({"a", "b", "c"}))),
            "TER 1 0 3 0.333333");
}

TEST(TerTest, PropertiesOnRandomPairs) {
  std::mt19937 gen(21);
  for (int i = 0; i < 3000; ++i) {
    Words h, r;
    for (int k = 0, n = gen() % 9; k < n; ++k) h.push_back(std::string(1, 'a' + gen() % 4));
    for (int k = 0, n = 1 + gen() % 8; k < n; ++k) r.push_back(std::string(1, 'a' + gen() % 4));
    const TerScore s = Ter(h, r);
    ASSERT_LE(s.shifts, s.edits);
    ASSERT_GE(s.score, 0.0);
    ASSERT_LE(s.edits, WordEditDistance(h, r));
    ASSERT_EQ(Ter(r, r).edits, 0);
    ASSERT_DOUBLE_EQ(s.score, static_cast<double>(s.edits) / r.size());
  }
}

TEST(TerTest, NeverBeatsExhaustiveSearch) {
  std::mt19937 gen(8);
  for (int i = 0; i < 300; ++i) {
    std::vector<int> h, r;
    for (int k = 0, n = gen() % 6; k < n; ++k) h.push_back(gen() % 3);
    for (int k = 0, n = 1 + gen() % 5; k < n; ++k) r.push_back(gen() % 3);
    Words hw, rw;
    for (int v : h) hw.push_back(std::string(1, 'a' + v));
    for (int v : r) rw.push_back(std::string(1, 'a' + v));
    ASSERT_GE(Ter(hw, rw).edits, testing::ExhaustiveTerEdits(h, r));
  }
}

class TenfoldTest : public ::testing::Test {
 protected:
  LanguageProfile lv_ = BundledProfile("lv");
};

TEST_F(TenfoldTest, AllIdenticalIsZero) {
  const std::vector<std::string> same(10, "Balta jūra, zaļa zeme.");
  const TenfoldTer t = SentenceTenfoldTer("Balta jūra, zaļa zeme.", same, lv_);
  EXPECT_EQ(t.score, 0.0);
  EXPECT_EQ(t.variants, 10u);
  EXPECT_EQ(t.shortfall, 0u);
}

TEST_F(TenfoldTest, DisjointIsAtLeastOne) {
  const std::vector<std::string> other(10, "pilnīgi cits teikums te");
  EXPECT_GE(SentenceTenfoldTer("a b c", other, lv_).score, 1.0);
}

TEST_F(TenfoldTest, MixedVariants) {
  std::vector<std::string> variants(5, "a b c d");
  for (int i = 0; i < 5; ++i) variants.push_back("a b x d");
  EXPECT_DOUBLE_EQ(SentenceTenfoldTer("a b c d", variants, lv_).score, 0.125);
  std::reverse(variants.begin(), variants.end());
  EXPECT_DOUBLE_EQ(SentenceTenfoldTer("a b c d", variants, lv_).score, 0.125);
}

TEST_F(TenfoldTest, OrderInvariantOnRandomInput) {
  std::mt19937 gen(2);
  const char* pool[] = {"a", "b", "c", "jūra", ","};
  for (int round = 0; round < 200; ++round) {
    std::vector<std::string> v;
    for (int i = 0; i < 10; ++i) {
      std::string s;
      for (int k = 0, n = gen() % 6; k < n; ++k) s += std::string(pool[gen() % 5]) + " ";
      v.push_back(s);
    }
    const double before = SentenceTenfoldTer("a b c jūra", v, lv_).score;
    std::shuffle(v.begin(), v.end(), gen);
    ASSERT_DOUBLE_EQ(SentenceTenfoldTer("a b c jūra", v, lv_).score, before);
  }
}

TEST_F(TenfoldTest, ShortfallAndErrors) {
  const TenfoldTer t =
      SentenceTenfoldTer("a b", std::vector<std::string>(7, "a b"), lv_);
  EXPECT_EQ(t.variants, 7u);
  EXPECT_EQ(t.shortfall, 3u);
  EXPECT_THROW(SentenceTenfoldTer("  ", std::vector<std::string>(10, "a"), lv_),
               MetricError);
}

class BleuTest : public ::testing::Test {
 protected:
  LanguageProfile en_ = BundledProfile("en");
};

TEST_F(BleuTest, IdenticalIsOne) {
  const std::vector<std::string> text = {"the cat sat on the mat .",
                                         "a dog runs fast today"};
  const BleuScore s = CorpusBleu(text, text, en_);
  EXPECT_DOUBLE_EQ(s.score, 1.0);
  EXPECT_DOUBLE_EQ(s.brevity_penalty, 1.0);
}

TEST_F(BleuTest, NoFourGramOverlapIsZero) {
  const BleuScore s = CorpusBleu(std::vector<std::string>{"a b c d"},
                                 std::vector<std::string>{"a b c e"}, en_);
  EXPECT_EQ(s.score, 0.0);
  EXPECT_GT(s.precisions[0], 0.0);
}

TEST_F(BleuTest, HandCountedFixture) {
  // Unigrams 9/10, bigrams 6/8, trigrams 3/6, 4-grams 1/4; lengths 10 vs 11.
  const std::vector<std::string> hyps = {"the cat sat on the mat",
                                         "a dog runs fast"};
  const std::vector<std::string> refs = {"the cat is on the mat",
                                         "a dog runs fast today"};
  const BleuScore s = CorpusBleu(hyps, refs, en_);
  EXPECT_DOUBLE_EQ(s.precisions[0], 0.9);
  EXPECT_DOUBLE_EQ(s.precisions[1], 0.75);
  EXPECT_DOUBLE_EQ(s.precisions[2], 0.5);
  EXPECT_DOUBLE_EQ(s.precisions[3], 0.25);
  EXPECT_EQ(s.hyp_length, 10u);
  EXPECT_EQ(s.ref_length, 11u);
  EXPECT_NEAR(s.brevity_penalty, std::exp(-0.1), 1e-15);
  EXPECT_NEAR(s.score, std::exp(-0.1) * std::pow(0.9 * 0.75 * 0.5 * 0.25, 0.25),
              1e-12);
}

TEST_F(BleuTest, MatchesDefinitionAndIsPermutationInvariant) {
  std::mt19937 gen(13);
  for (int round = 0; round < 200; ++round) {
    std::vector<std::string> hyps, refs;
    std::vector<Words> hw, rw;
    for (int i = 0; i < 6; ++i) {
      Words h, r;
      for (int k = 0, n = 2 + gen() % 8; k < n; ++k) h.push_back(std::string(1, 'a' + gen() % 3));
      for (int k = 0, n = 2 + gen() % 8; k < n; ++k) r.push_back(std::string(1, 'a' + gen() % 3));
      std::string hs, rs;
      for (auto& w : h) hs += w + " ";
      for (auto& w : r) rs += w + " ";
      hyps.push_back(hs);
      refs.push_back(rs);
      hw.push_back(h);
      rw.push_back(r);
    }
    const double score = CorpusBleu(hyps, refs, en_).score;
    ASSERT_NEAR(score, testing::DefinitionBleu(hw, rw), 1e-12);
    std::vector<size_t> order(hyps.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), gen);
    std::vector<std::string> ph, pr;
    for (size_t i : order) {
      ph.push_back(hyps[i]);
      pr.push_back(refs[i]);
    }
    ASSERT_NEAR(CorpusBleu(ph, pr, en_).score, score, 1e-12);
  }
}

TEST_F(BleuTest, StatsMergeIsAssociative) {
  const BleuStats a = SentenceBleuStats(W({"a", "b", "c"}), W({"a", "b", "d"}));
  const BleuStats b = SentenceBleuStats(W({"x", "y"}), W({"x", "y", "z"}));
  BleuStats ab = a;
  ab += b;
  BleuStats ba = b;
  ba += a;
  EXPECT_EQ(ab.matches, ba.matches);
  EXPECT_EQ(ab.totals, ba.totals);
  EXPECT_EQ(ab.hyp_length, 5u);
  EXPECT_EQ(ab.ref_length, 6u);
}

TEST_F(BleuTest, Errors) {
  EXPECT_THROW(CorpusBleu(std::vector<std::string>{"a"},
                          std::vector<std::string>{"a", "b"}, en_),
               MetricError);
  EXPECT_THROW(CorpusBleu(std::vector<std::string>{}, std::vector<std::string>{}, en_),
               MetricError);
  const BleuScore empty = CorpusBleu(std::vector<std::string>{""},
                                     std::vector<std::string>{"a b"}, en_);
  EXPECT_EQ(empty.score, 0.0);
}

}  // namespace
}  // namespace orthonoise
