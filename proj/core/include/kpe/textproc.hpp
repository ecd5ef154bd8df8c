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

// Tokenization, sentence splitting and phrase normalization shared by the
// extractors, the metrics and the corpus statistics.
//
// Tokenizer rules:
//   word        maximal run of Latin or Cyrillic letters; a single hyphen
//               between two letters is word-internal ("веб-сервис")
//   number      maximal run of ASCII digits
//   punctuation every other non-whitespace code point, one token each
// Whitespace never produces a token. Offsets are byte offsets into the
// source string, so `text.substr(t.start, t.end - t.start) == t.surface`.

#ifndef KPE_TEXTPROC_HPP_
#define KPE_TEXTPROC_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace kpe {

enum class TokenKind { kWord, kNumber, kPunctuation };

struct Token {
  std::string surface;
  std::size_t start = 0;
  std::size_t end = 0;
  TokenKind kind = TokenKind::kWord;

  bool is_word() const { return kind == TokenKind::kWord; }
  friend bool operator==(const Token&, const Token&) = default;
};

std::vector<Token> tokenize(std::string_view text);

// Surfaces of the word tokens only, in order.
std::vector<std::string> word_tokens(std::string_view text);

struct SentenceSpan {
  std::size_t start = 0;  // byte offset of the first token
  std::size_t end = 0;    // byte offset one past the last token
  std::size_t index = 0;

  friend bool operator==(const SentenceSpan&, const SentenceSpan&) = default;
};

// A boundary follows a run of '.', '!', '?' or '…' when the run is followed
// by whitespace and an uppercase letter, or ends the text. A lone '.'
// directly after a one-letter word ("A. Пример") never ends a sentence.
// Spans without any word or number token are dropped.
std::vector<SentenceSpan> split_sentences(std::string_view text);

// Same boundaries as split_sentences over an existing token stream. Returns
// the sentence index of every token (punctuation belongs to the sentence it
// terminates or sits in) and the number of sentences.
struct SentenceAssignment {
  std::vector<std::size_t> sentence_of_token;
  std::size_t sentence_count = 0;
};
SentenceAssignment assign_sentences(const std::vector<Token>& tokens);

// Word-to-canonical-form mapping used for matching. Implementations must be
// deterministic, return lowercase output without whitespace, and be safe to
// call concurrently.
class Normalizer {
 public:
  virtual ~Normalizer() = default;
  virtual std::string_view name() const = 0;
  virtual std::string normalize(std::string_view word) const = 0;
};

// Canonical matching key of a phrase: word tokens mapped through the
// normalizer, number tokens kept verbatim, punctuation dropped, joined by
// single spaces. An all-punctuation phrase yields "".
std::string normalize_phrase(std::string_view phrase, const Normalizer& n);

// The same key split into its tokens.
std::vector<std::string> normalized_tokens(std::string_view phrase,
                                           const Normalizer& n);

}  // namespace kpe

#endif  // KPE_TEXTPROC_HPP_
