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

#include "kpe/textproc.hpp"

#include "kpe/unicode.hpp"

namespace kpe {
namespace {

bool is_terminator(const Token& t) {
  return t.kind == TokenKind::kPunctuation &&
         (t.surface == "." || t.surface == "!" || t.surface == "?" ||
          t.surface == "…");
}

char32_t first_cp(std::string_view s) {
  return s.empty() ? 0 : utf8::decode(s, 0).cp;
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const utf8::Decoded d = utf8::decode(text, pos);
    if (utf8::is_space(d.cp)) {
      pos += d.length;
      continue;
    }
    const std::size_t start = pos;
    TokenKind kind;
    if (utf8::is_letter(d.cp)) {
      kind = TokenKind::kWord;
      pos += d.length;
      while (pos < text.size()) {
        const utf8::Decoded next = utf8::decode(text, pos);
        if (utf8::is_letter(next.cp)) {
          pos += next.length;
          continue;
        }
        if (utf8::is_hyphen(next.cp) && pos + next.length < text.size()) {
          const utf8::Decoded after = utf8::decode(text, pos + next.length);
          if (utf8::is_letter(after.cp)) {
            pos += next.length + after.length;
            continue;
          }
        }
        break;
      }
    } else if (utf8::is_digit(d.cp)) {
      kind = TokenKind::kNumber;
      pos += d.length;
      while (pos < text.size() && utf8::is_digit(utf8::decode(text, pos).cp)) {
        pos += 1;
      }
    } else {
      kind = TokenKind::kPunctuation;
      pos += d.length;
    }
    tokens.push_back(
        Token{std::string(text.substr(start, pos - start)), start, pos, kind});
  }
  return tokens;
}

std::vector<std::string> word_tokens(std::string_view text) {
  std::vector<std::string> words;
  for (Token& t : tokenize(text)) {
    if (t.is_word()) words.push_back(std::move(t.surface));
  }
  return words;
}

SentenceAssignment assign_sentences(const std::vector<Token>& tokens) {
  // First pass: raw sentence id per token, boundaries after terminator runs.
  std::vector<std::size_t> raw(tokens.size(), 0);
  std::size_t current = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    raw[i] = current;
    if (!is_terminator(tokens[i])) continue;
    // Extend over adjacent terminators ("?!", "...").
    std::size_t j = i;
    while (j + 1 < tokens.size() && is_terminator(tokens[j + 1]) &&
           tokens[j + 1].start == tokens[j].end) {
      ++j;
      raw[j] = current;
    }
    const bool lone_dot = (j == i && tokens[i].surface == ".");
    const bool after_initial = lone_dot && i > 0 && tokens[i - 1].is_word() &&
                               tokens[i - 1].end == tokens[i].start &&
                               utf8::length(tokens[i - 1].surface) == 1;
    bool boundary = false;
    if (j + 1 == tokens.size()) {
      boundary = true;
    } else if (!after_initial) {
      const Token& next = tokens[j + 1];
      const bool gap = next.start > tokens[j].end;
      boundary = gap && next.is_word() && utf8::is_upper(first_cp(next.surface));
    }
    i = j;
    if (boundary) ++current;
  }

  // Second pass: drop sentences with no word or number token and renumber.
  std::vector<bool> has_content(current + 1, false);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].kind != TokenKind::kPunctuation) has_content[raw[i]] = true;
  }
  std::vector<std::size_t> remap(current + 1, 0);
  std::size_t count = 0;
  std::size_t last_kept = 0;
  for (std::size_t s = 0; s <= current; ++s) {
    if (has_content[s]) {
      last_kept = count;
      remap[s] = count++;
    } else {
      // Content-free punctuation attaches to the preceding kept sentence.
      remap[s] = count == 0 ? 0 : last_kept;
    }
  }
  SentenceAssignment out;
  out.sentence_count = count;
  out.sentence_of_token.resize(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    out.sentence_of_token[i] = remap[raw[i]];
  }
  return out;
}

std::vector<SentenceSpan> split_sentences(std::string_view text) {
  const std::vector<Token> tokens = tokenize(text);
  const SentenceAssignment assignment = assign_sentences(tokens);
  std::vector<SentenceSpan> spans(assignment.sentence_count);
  std::vector<bool> seen(assignment.sentence_count, false);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (assignment.sentence_count == 0) break;
    const std::size_t s = assignment.sentence_of_token[i];
    if (!seen[s]) {
      spans[s] = SentenceSpan{tokens[i].start, tokens[i].end, s};
      seen[s] = true;
    } else {
      spans[s].end = tokens[i].end;
    }
  }
  return spans;
}

std::vector<std::string> normalized_tokens(std::string_view phrase,
                                           const Normalizer& n) {
  std::vector<std::string> out;
  for (const Token& t : tokenize(phrase)) {
    switch (t.kind) {
      case TokenKind::kWord: {
        std::string norm = n.normalize(t.surface);
        if (!norm.empty()) out.push_back(std::move(norm));
        break;
      }
      case TokenKind::kNumber:
        out.push_back(t.surface);
        break;
      case TokenKind::kPunctuation:
        break;
    }
  }
  return out;
}

std::string normalize_phrase(std::string_view phrase, const Normalizer& n) {
  std::string key;
  for (const std::string& tok : normalized_tokens(phrase, n)) {
    if (!key.empty()) key.push_back(' ');
    key += tok;
  }
  return key;
}

}  // namespace kpe
