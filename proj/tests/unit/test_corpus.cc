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
#include <cmath>
#include <random>

#include "kpe/corpus.hpp"
#include "kpe/error.hpp"
#include "kpe/normalizer.hpp"
#include "oracles.hpp"

namespace kpe {
namespace {

std::string record(std::string_view id, std::string_view text,
                   std::string_view keys, std::string_view split = "train") {
  return std::string("{\"id\":\"") + std::string(id) + "\",\"text\":\"" + std::string(text) +
         "\",\"keyphrases\":" + std::string(keys) + ",\"domain\":\"d\",\"split\":\"" +
         std::string(split) + "\"}\n";
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIo;
}

TEST(ParseCorpus, ThreeValidLines) {
  const Corpus c = parse_corpus(record("a", "Один.", R"(["один"])") +
                                    record("b", "Два.", R"(["два"])", "test") +
                                    record("c", "Три.", R"(["три"])"),
                                "x");
  EXPECT_EQ(c.size(), 3u);
  EXPECT_EQ(c.documents()[1].id, "b");
  EXPECT_EQ(c.documents()[1].split, Split::kTest);
  ASSERT_NE(c.find("c"), nullptr);
  EXPECT_EQ(c.find("zzz"), nullptr);
  EXPECT_EQ(c.split(Split::kTrain).size(), 2u);
}

TEST(ParseCorpus, UnknownFieldsIgnoredAndKeyphrasesTrimmed) {
  const Corpus c = parse_corpus(
      R"({"id":"a","text":"t","keyphrases":["  граф  "],"domain":"d","split":"train","extra":1})",
      "x");
  EXPECT_EQ(c.documents()[0].keyphrases[0], "граф");
}

TEST(ParseCorpus, EmptyKeyphraseListIsMalformedWithLine) {
  try {
    parse_corpus(record("a", "t", R"(["x"])") + record("b", "t", "[]"), "x");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedRecord);
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ParseCorpus, Errors) {
  EXPECT_EQ(code_of([] { parse_corpus(record("d1", "t", R"(["x"])") + record("d1", "u", R"(["y"])"), "x"); }),
            ErrorCode::kDuplicateId);
  EXPECT_EQ(code_of([] { parse_corpus("", "x"); }), ErrorCode::kEmptyCorpus);
  EXPECT_EQ(code_of([] { parse_corpus("{not json}\n", "x"); }), ErrorCode::kMalformedRecord);
  EXPECT_EQ(code_of([] { parse_corpus(record("a", "", R"(["x"])"), "x"); }),
            ErrorCode::kMalformedRecord);
  EXPECT_EQ(code_of([] { parse_corpus(record("a", "t", R"(["  "])"), "x"); }),
            ErrorCode::kMalformedRecord);
  EXPECT_EQ(code_of([] { parse_corpus(record("a", "t", R"(["x"])", "dev"), "x"); }),
            ErrorCode::kMalformedRecord);
  EXPECT_EQ(code_of([] { load_corpus("/nonexistent/corpus.jsonl"); }), ErrorCode::kIo);
}

TEST(PhraseAppearsIn, Examples) {
  const RussianStemmer n;
  EXPECT_TRUE(phrase_appears_in("граф", "Мы строим граф знаний.", n));
  EXPECT_FALSE(phrase_appears_in("квантовый компьютер", "Классические методы...", n));
  EXPECT_FALSE(phrase_appears_in("сеть знаний", "знаний сеть", n));
  EXPECT_TRUE(phrase_appears_in("нейронные сети", "Обучение нейронных сетей.", n));
}

TEST(PhraseAppearsIn, VerbatimTokenAlignedSubstringAlwaysAppears) {
  const RussianStemmer n;
  const std::string text = "Новый метод кластеризации текстов, основанный на графах знаний.";
  const auto toks = tokenize(text);
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (!toks[i].is_word()) continue;
    for (std::size_t j = i; j < toks.size(); ++j) {
      const std::string sub = text.substr(toks[i].start, toks[j].end - toks[i].start);
      EXPECT_TRUE(phrase_appears_in(sub, text, n)) << sub;
    }
  }
}

TEST(MeanStd, Population) {
  const std::vector<double> v = {1, 2, 3, 4};
  const MeanStd m = mean_std(v);
  EXPECT_DOUBLE_EQ(m.mean, 2.5);
  EXPECT_DOUBLE_EQ(m.std, std::sqrt(1.25));
  EXPECT_EQ(mean_std({}).mean, 0.0);
}

// Values frozen from tests/oracles/corpus_stats_oracle.py on stats3.jsonl.
TEST(CorpusStats, ThreeDocumentFixture) {
  const Corpus c = load_corpus(testing::fixture("stats3.jsonl"));
  const CorpusStats s = corpus_stats(c, LowercaseNormalizer{});
  EXPECT_EQ(s.train_size, 1u);
  EXPECT_EQ(s.test_size, 2u);
  EXPECT_DOUBLE_EQ(s.sentences.mean, 2.0);
  EXPECT_DOUBLE_EQ(s.sentences.std, 0.816496580927726);
  EXPECT_DOUBLE_EQ(s.tokens.mean, 6.333333333333333);
  EXPECT_DOUBLE_EQ(s.tokens.std, 1.699673171197595);
  EXPECT_DOUBLE_EQ(s.keyphrases.mean, 2.0);
  EXPECT_DOUBLE_EQ(s.keyphrases.std, 0.816496580927726);
  EXPECT_DOUBLE_EQ(s.absent_pct, 100.0 / 3.0);
}

TEST(CorpusStats, SpecExamples) {
  const LowercaseNormalizer n;
  const Corpus one("x", {Document{"a", "Один. Два.", {"один", "два"}, "d", Split::kTrain}});
  const CorpusStats s = corpus_stats(one, n);
  EXPECT_EQ(s.sentences.mean, 2.0);
  EXPECT_EQ(s.sentences.std, 0.0);
  EXPECT_EQ(s.absent_pct, 0.0);

  const Corpus four("x", {Document{"a", "граф и сеть", {"граф", "сеть", "и", "дерево"}, "d",
                                   Split::kTest}});
  EXPECT_DOUBLE_EQ(corpus_stats(four, n).absent_pct, 25.0);
}

TEST(CorpusStats, Properties) {
  const RussianStemmer n;
  const Corpus base = load_corpus(testing::fixture("corpus10.jsonl"));
  const CorpusStats s = corpus_stats(base, n, 4);

  std::vector<Document> docs(base.documents().begin(), base.documents().end());
  std::shuffle(docs.begin(), docs.end(), std::mt19937(3));
  EXPECT_DOUBLE_EQ(corpus_stats(Corpus("s", docs), n).absent_pct, s.absent_pct);

  docs.push_back(Document{"extra", "Графы знаний полезны.", {"графы знаний"}, "d", Split::kTrain});
  EXPECT_LE(corpus_stats(Corpus("s", docs), n).absent_pct, s.absent_pct);

  std::vector<Document> both(base.documents().begin(), base.documents().end());
  const Corpus extra = load_corpus(testing::fixture("stats3.jsonl"));
  both.insert(both.end(), extra.documents().begin(), extra.documents().end());
  EXPECT_EQ(corpus_stats(Corpus("ab", both), n).train_size, s.train_size + 1);
  EXPECT_EQ(corpus_stats(base, n, 1).tokens.mean, s.tokens.mean);
}

}  // namespace
}  // namespace kpe
