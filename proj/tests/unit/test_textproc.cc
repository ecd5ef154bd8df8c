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

#include <random>
#include <string>
#include <vector>

#include "kpe/normalizer.hpp"
#include "kpe/stopwords.hpp"
#include "kpe/textproc.hpp"
#include "kpe/unicode.hpp"

namespace kpe {
namespace {

using K = TokenKind;

std::vector<std::pair<std::string, TokenKind>> shape(std::string_view text) {
  std::vector<std::pair<std::string, TokenKind>> out;
  for (const Token& t : tokenize(text)) out.emplace_back(t.surface, t.kind);
  return out;
}

TEST(Tokenize, EmptyInput) { EXPECT_TRUE(tokenize("").empty()); }

TEST(Tokenize, CyrillicWithComma) {
  using V = std::vector<std::pair<std::string, TokenKind>>;
  EXPECT_EQ(shape("граф, модель"),
            (V{{"граф", K::kWord}, {",", K::kPunctuation}, {"модель", K::kWord}}));
}

TEST(Tokenize, SlashAndNumber) {
  using V = std::vector<std::pair<std::string, TokenKind>>;
  EXPECT_EQ(shape("AC/DC 42"), (V{{"AC", K::kWord},
                                  {"/", K::kPunctuation},
                                  {"DC", K::kWord},
                                  {"42", K::kNumber}}));
}

TEST(Tokenize, HyphenIsWordInternalOnlyBetweenLetters) {
  using V = std::vector<std::pair<std::string, TokenKind>>;
  EXPECT_EQ(shape("веб-сервис"), (V{{"веб-сервис", K::kWord}}));
  EXPECT_EQ(shape("a--b"), (V{{"a", K::kWord},
                              {"-", K::kPunctuation},
                              {"-", K::kPunctuation},
                              {"b", K::kWord}}));
  EXPECT_EQ(shape("-x"), (V{{"-", K::kPunctuation}, {"x", K::kWord}}));
  EXPECT_EQ(shape("k-2"), (V{{"k", K::kWord}, {"-", K::kPunctuation}, {"2", K::kNumber}}));
}

TEST(Tokenize, MixedLettersAndDigitsSplit) {
  using V = std::vector<std::pair<std::string, TokenKind>>;
  EXPECT_EQ(shape("GPT3"), (V{{"GPT", K::kWord}, {"3", K::kNumber}}));
}

TEST(Tokenize, EachPunctuationCodePointIsOneToken) {
  using V = std::vector<std::pair<std::string, TokenKind>>;
  EXPECT_EQ(shape("«да»…"), (V{{"«", K::kPunctuation},
                               {"да", K::kWord},
                               {"»", K::kPunctuation},
                               {"…", K::kPunctuation}}));
}

TEST(Tokenize, ByteOffsets) {
  const auto toks = tokenize("Граф 1");
  ASSERT_EQ(toks.size(), 2u);
  EXPECT_EQ(toks[0].start, 0u);
  EXPECT_EQ(toks[0].end, 8u);  // four two-byte letters
  EXPECT_EQ(toks[1].start, 9u);
  EXPECT_EQ(toks[1].end, 10u);
}

std::string random_text(std::mt19937& rng) {
  static const std::vector<std::string> pieces = {
      "граф", "Сеть", "model", "-", " ", "  ", ".", "!", "?", "…", ",", "42",
      "веб-сервис", "\n", "A", "ё", "(", ")", "×", "\t", "«", "»", "x-y"};
  std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
  std::uniform_int_distribution<int> len(0, 30);
  std::string s;
  for (int i = len(rng); i > 0; --i) s += pieces[pick(rng)];
  return s;
}

TEST(TokenizeProperty, RoundTripAndMonotoneOffsets) {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 500; ++iter) {
    const std::string text = random_text(rng);
    const auto toks = tokenize(text);
    std::string rebuilt;
    std::size_t pos = 0;
    for (const Token& t : toks) {
      ASSERT_LT(t.start, t.end);
      ASSERT_LE(pos, t.start);
      ASSERT_EQ(text.substr(t.start, t.end - t.start), t.surface);
      const std::string gap = text.substr(pos, t.start - pos);
      for (char c : gap) ASSERT_TRUE(c == ' ' || c == '\n' || c == '\t') << text;
      rebuilt += gap + t.surface;
      pos = t.end;
    }
    rebuilt += text.substr(pos);
    EXPECT_EQ(rebuilt, text);
  }
}

TEST(SplitSentences, Examples) {
  EXPECT_EQ(split_sentences("A. Пример.").size(), 1u);
  EXPECT_EQ(split_sentences("Один. Два.").size(), 2u);
  EXPECT_EQ(split_sentences("без точки").size(), 1u);
  EXPECT_TRUE(split_sentences("").empty());
  EXPECT_TRUE(split_sentences("...").empty());
}

TEST(SplitSentences, LowercaseContinuationIsNotABoundary) {
  EXPECT_EQ(split_sentences("см. рис. 2 далее. Далее текст.").size(), 2u);
  EXPECT_EQ(split_sentences("и т. д. Далее текст.").size(), 1u);
}

TEST(SplitSentences, TerminatorRuns) {
  const auto spans = split_sentences("Правда?! Да… Нет.");
  ASSERT_EQ(spans.size(), 3u);
  EXPECT_EQ(spans[0].start, 0u);
  EXPECT_EQ(spans[1].index, 1u);
}

TEST(SplitSentences, SpansCoverWordsAndNeverSplitThem) {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    const std::string text = random_text(rng);
    const auto spans = split_sentences(text);
    for (std::size_t i = 0; i < spans.size(); ++i) {
      EXPECT_EQ(spans[i].index, i);
      if (i > 0) { EXPECT_LE(spans[i - 1].end, spans[i].start); }
    }
    for (const Token& t : tokenize(text)) {
      if (t.kind == TokenKind::kPunctuation) continue;
      int covering = 0;
      for (const auto& s : spans) {
        if (s.start <= t.start && t.end <= s.end) ++covering;
        EXPECT_FALSE(s.start > t.start && s.start < t.end);
        EXPECT_FALSE(s.end > t.start && s.end < t.end);
      }
      EXPECT_EQ(covering, 1) << text;
    }
  }
}

TEST(AssignSentences, MatchesSpanCount) {
  const auto toks = tokenize("Один. Два! Три");
  const auto a = assign_sentences(toks);
  EXPECT_EQ(a.sentence_count, 3u);
  EXPECT_EQ(a.sentence_of_token,
            (std::vector<std::size_t>{0, 0, 1, 1, 2}));
}

TEST(NormalizePhrase, Examples) {
  const LowercaseNormalizer n;
  EXPECT_EQ(normalize_phrase("Нейронные Сети", n), "нейронные сети");
  EXPECT_EQ(normalize_phrase("graph-based model", n), "graph-based model");
  EXPECT_EQ(normalize_phrase("???", n), "");
  EXPECT_EQ(normalize_phrase("метод  2,  модель", n), "метод 2 модель");
}

TEST(NormalizePhrase, CaseInsensitiveUnderStemmer) {
  const RussianStemmer n;
  EXPECT_EQ(normalize_phrase("НЕЙРОННЫЕ СЕТИ", n), normalize_phrase("нейронные сети", n));
  EXPECT_EQ(normalize_phrase("нейронных сетей", n), normalize_phrase("нейронные сети", n));
}

TEST(Stopwords, BundledRussian) {
  EXPECT_TRUE(is_stopword("и", Lang::kRu));
  EXPECT_TRUE(is_stopword("И", Lang::kRu));
  EXPECT_FALSE(is_stopword("нейросеть", Lang::kRu));
  EXPECT_FALSE(is_stopword("", Lang::kRu));
  EXPECT_EQ(StopwordList::bundled(Lang::kRu).version(), "ru-1");
}

TEST(Stopwords, BundledEnglish) {
  EXPECT_TRUE(is_stopword("the", Lang::kEn));
  EXPECT_FALSE(is_stopword("graph", Lang::kEn));
  EXPECT_EQ(StopwordList::bundled(Lang::kEn).version(), "en-1");
}

TEST(Stopwords, ParseIgnoresCommentsAndBlankLines) {
  const auto list = StopwordList::parse("# version: t-9\nфу\n\n  бар  \n# comment\n");
  EXPECT_EQ(list.version(), "t-9");
  EXPECT_EQ(list.size(), 2u);
  EXPECT_TRUE(list.contains("Бар"));
  EXPECT_FALSE(list.contains("comment"));
}

TEST(Utf8, DecodeAndLower) {
  EXPECT_EQ(utf8::length("ёж"), 2u);
  EXPECT_EQ(utf8::to_lower("ЁЖ Ab"), "ёж ab");
  EXPECT_TRUE(utf8::contains_cyrillic("abc д"));
  EXPECT_FALSE(utf8::contains_cyrillic("abc"));
}

}  // namespace
}  // namespace kpe
