// Copyright 2026 The KPE Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "kpe/corpus.hpp"
#include "kpe/error.hpp"
#include "kpe/log.hpp"
#include "kpe/metrics.hpp"
#include "kpe/normalizer.hpp"
#include "oracles.hpp"

namespace kpe {
namespace {

using L = std::vector<std::string>;

const LowercaseNormalizer kLower;

TEST(JoinKeyphrases, Examples) {
  EXPECT_EQ(join_keyphrases(L{"a", "b"}), "a, b");
  EXPECT_EQ(join_keyphrases(L{}), "");
  EXPECT_EQ(join_keyphrases(L{"граф знаний"}), "граф знаний");
}

TEST(Rouge1, Examples) {
  const auto same = rouge1(L{"graph model", "tree"}, L{"graph model", "tree"}, kLower);
  EXPECT_DOUBLE_EQ(same.f1, 1.0);
  const auto a = rouge1(L{"graph", "model"}, L{"graph"}, kLower);
  EXPECT_DOUBLE_EQ(a.precision, 0.5);
  EXPECT_DOUBLE_EQ(a.recall, 1.0);
  EXPECT_NEAR(a.f1, 2.0 / 3.0, 1e-12);
  const auto clipped = rouge1(L{"a a"}, L{"a"}, kLower);
  EXPECT_DOUBLE_EQ(clipped.precision, 0.5);
  EXPECT_DOUBLE_EQ(clipped.recall, 1.0);
}

TEST(Rouge1, EmptySidesAndWarning) {
  std::vector<std::string> warnings;
  auto prev = set_warning_sink([&](std::string_view m) { warnings.emplace_back(m); });
  EXPECT_EQ(rouge1(L{}, L{"a"}, kLower).f1, 0.0);
  EXPECT_EQ(rouge1(L{"a"}, L{}, kLower).f1, 0.0);
  EXPECT_TRUE(warnings.empty());
  EXPECT_EQ(rouge1(L{}, L{}, kLower).f1, 0.0);
  EXPECT_EQ(warnings.size(), 1u);
  set_warning_sink(std::move(prev));
}

TEST(Rouge1, NormalizerApplies) {
  const RussianStemmer stem;
  EXPECT_DOUBLE_EQ(rouge1(L{"нейронных сетей"}, L{"нейронные сети"}, stem).f1, 1.0);
  EXPECT_LT(rouge1(L{"нейронных сетей"}, L{"нейронные сети"}, kLower).f1, 1.0);
}

TEST(FullMatch, Examples) {
  const auto s = fullmatch_f1(L{"a", "b"}, L{"b", "c"}, kLower);
  EXPECT_DOUBLE_EQ(s.precision, 0.5);
  EXPECT_DOUBLE_EQ(s.recall, 0.5);
  EXPECT_DOUBLE_EQ(s.f1, 0.5);
  EXPECT_DOUBLE_EQ(fullmatch_f1(L{"x y", "z"}, L{"z", "X  Y"}, kLower).f1, 1.0);
  EXPECT_DOUBLE_EQ(fullmatch_f1(L{"a"}, L{"b"}, kLower).f1, 0.0);
  EXPECT_DOUBLE_EQ(fullmatch_f1(L{}, L{}, kLower).f1, 1.0);
  EXPECT_DOUBLE_EQ(fullmatch_f1(L{}, L{"a"}, kLower).f1, 0.0);
}

TEST(FullMatch, DuplicatesCountOnce) {
  const auto s = fullmatch_f1(L{"a", "A", "b"}, L{"a"}, kLower);
  EXPECT_DOUBLE_EQ(s.precision, 0.5);
  EXPECT_DOUBLE_EQ(s.recall, 1.0);
}

TEST(BertScore, IdentityAndOrthogonality) {
  const HashProvider p(32, 42);
  const auto s = bertscore(L{"graph model", "tree"}, L{"graph model", "tree"}, p);
  EXPECT_NEAR(s.f1, 1.0, 1e-9);

  // Two-dimensional cache with orthogonal token vectors.
  const std::vector<Vector> x = {{1, 0}}, y = {{0, 1}};
  const CacheProvider orth = CacheProvider::parse(cache_record("x", "tokens", x) + "\n" +
                                                  cache_record("y", "tokens", y) + "\n");
  const auto o = bertscore(L{"x"}, L{"y"}, orth);
  EXPECT_EQ(o.precision, 0.0);
  EXPECT_EQ(o.recall, 0.0);
  EXPECT_EQ(o.f1, 0.0);
  EXPECT_EQ(bertscore(L{}, L{"y"}, orth).f1, 0.0);
}

TEST(BertScore, ThreeByTwoMatchesPairwiseOracle) {
  const HashProvider p(16, 3);
  const L cand = {"graph neural", "tree"};
  const L ref = {"neural network"};
  const auto got = bertscore(cand, ref, p);
  const auto want = testing::bertscore_oracle(cand, ref, p);
  EXPECT_NEAR(got.precision, want.p, 1e-9);
  EXPECT_NEAR(got.recall, want.r, 1e-9);
  EXPECT_NEAR(got.f1, want.f, 1e-9);
}

TEST(Metrics, RandomizedOracleEquivalence) {
  testing::ListGenerator gen(2024);
  const HashProvider p(24, 42);
  for (int i = 0; i < 300; ++i) {
    const L c = gen.list(6, 4);
    const L r = gen.list(6, 4);
    const auto ro = testing::rouge1_oracle(c, r);
    const auto rg = rouge1(c, r, kLower);
    EXPECT_EQ(rg.precision, ro.p);
    EXPECT_EQ(rg.recall, ro.r);
    EXPECT_EQ(rg.f1, ro.f);
    const auto fo = testing::fullmatch_oracle(c, r);
    const auto fg = fullmatch_f1(c, r, kLower);
    EXPECT_EQ(fg.precision, fo.p);
    EXPECT_EQ(fg.recall, fo.r);
    EXPECT_EQ(fg.f1, fo.f);
    const auto bo = testing::bertscore_oracle(c, r, p);
    const auto bg = bertscore(c, r, p);
    EXPECT_NEAR(bg.precision, bo.p, 1e-9);
    EXPECT_NEAR(bg.recall, bo.r, 1e-9);
    EXPECT_NEAR(bg.f1, bo.f, 1e-9);
    for (const MetricScore& s : {rg, fg, bg}) {
      for (double v : {s.precision, s.recall, s.f1}) {
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 1.0);
      }
    }
    const auto swapped = fullmatch_f1(r, c, kLower);
    EXPECT_EQ(swapped.precision, fg.recall);
    EXPECT_EQ(swapped.recall, fg.precision);
    if (!r.empty()) {
      L more = c;
      more.push_back(r.front());
      EXPECT_GE(fullmatch_f1(more, r, kLower).recall, fg.recall);
    }
  }
}

TEST(TruncateTopK, Examples) {
  const L seven = {"1", "2", "3", "4", "5", "6", "7"};
  EXPECT_EQ(truncate_topk(seven, 5), (L{"1", "2", "3", "4", "5"}));
  EXPECT_EQ(truncate_topk(L{"a", "b", "c"}, 5), (L{"a", "b", "c"}));
  const auto five = truncate_topk(seven, 5);
  const auto ten = truncate_topk(seven, 10);
  EXPECT_TRUE(std::equal(five.begin(), five.end(), ten.begin()));
  EXPECT_THROW(truncate_topk(seven, 0), Error);
}

TEST(Abstractness, Examples) {
  const RussianStemmer n;
  const std::string text = "Нейронные сети решают задачи классификации графов.";
  EXPECT_EQ(abstractness(L{"нейронные сети", "задачи"}, text, n), 0.0);
  EXPECT_EQ(abstractness(L{"квантовые вычисления", "логистика"}, text, n), 1.0);
  EXPECT_EQ(abstractness(L{"нейронная сеть", "графов", "задачи классификации", "логистика"}, text, n),
            0.25);
  EXPECT_EQ(abstractness(L{}, text, n), 0.0);
}

TEST(Abstractness, ComplementsAppearingFraction) {
  const RussianStemmer n;
  const std::string text = "Нейронные сети решают задачи.";
  const L preds = {"сети", "графы", "решают задачи", "модели", "нейронные"};
  std::size_t appearing = 0;
  for (const auto& p : preds) appearing += phrase_appears_in(p, text, n) ? 1 : 0;
  EXPECT_EQ(abstractness(preds, text, n) + static_cast<double>(appearing) / preds.size(), 1.0);
}

TEST(Aggregate, Examples) {
  EXPECT_NEAR(aggregate(std::vector<double>{0.2, 0.4}), 0.3, 1e-15);
  EXPECT_EQ(aggregate(std::vector<double>(7, 0.125)), 0.125);
  EXPECT_THROW(aggregate(std::vector<double>{}), Error);
  const std::vector<MetricScore> s = {{1, 0, 0}, {0, 1, 0.5}};
  const auto m = aggregate(s);
  EXPECT_EQ(m.precision, 0.5);
  EXPECT_EQ(m.f1, 0.25);
}

TEST(Aggregate, PermutationInvariant) {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<double> v(64);
  for (double& x : v) x = u(rng);
  const double a = aggregate(v);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(v.begin(), v.end(), rng);
    EXPECT_NEAR(aggregate(v), a, 1e-12);
  }
}

TEST(TopK, ParseAndValidate) {
  EXPECT_EQ(parse_cutoffs("5,10,15"), (std::vector<std::size_t>{5, 10, 15}));
  EXPECT_EQ(parse_cutoffs(" 3 , 7"), (std::vector<std::size_t>{3, 7}));
  EXPECT_THROW(parse_cutoffs("10,5"), Error);
  EXPECT_THROW(parse_cutoffs("0"), Error);
  EXPECT_THROW(parse_cutoffs("5,x"), Error);
  EXPECT_THROW(parse_cutoffs("5,,10"), Error);
}

}  // namespace
}  // namespace kpe
