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

#include "kpe/extract.hpp"

#include <algorithm>
#include <unordered_map>

#include "extract_internal.hpp"
#include "kpe/error.hpp"
#include "kpe/unicode.hpp"
#include "text_util.hpp"

namespace kpe {

std::string_view extractor_name(ExtractorKind kind) {
  switch (kind) {
    case ExtractorKind::kTermFreq: return "termfreq";
    case ExtractorKind::kYake: return "yake";
    case ExtractorKind::kEmbedRank: return "embedrank";
  }
  return "unknown";
}

std::optional<ExtractorKind> parse_extractor(std::string_view name) {
  if (name == "termfreq") return ExtractorKind::kTermFreq;
  if (name == "yake") return ExtractorKind::kYake;
  if (name == "embedrank") return ExtractorKind::kEmbedRank;
  return std::nullopt;
}

std::vector<std::string> ExtractionResult::surfaces() const {
  std::vector<std::string> out;
  out.reserve(ranking.size());
  for (const Candidate& c : ranking) out.push_back(c.surface);
  return out;
}

namespace internal {

void require_text(const Document& doc) {
  if (trim(doc.text).empty()) {
    throw Error(ErrorCode::kEmptyDocument,
                "document '" + doc.id + "' has no text", doc.id);
  }
}

std::vector<Candidate> merge_occurrences(
    const std::vector<CandidateOccurrence>& occurrences,
    std::vector<std::size_t>* counts) {
  std::vector<Candidate> merged;
  std::unordered_map<std::string_view, std::size_t> index;
  if (counts) counts->clear();
  for (const CandidateOccurrence& occ : occurrences) {
    auto [it, inserted] = index.emplace(occ.normalized, merged.size());
    if (inserted) {
      merged.push_back(
          Candidate{occ.surface, occ.normalized, occ.start_token, occ.length, 0.0});
      if (counts) counts->push_back(1);
    } else if (counts) {
      ++(*counts)[it->second];
    }
  }
  return merged;
}

}  // namespace internal

std::vector<CandidateOccurrence> candidate_occurrences(
    const std::vector<Token>& tokens, const SentenceAssignment& sentences,
    const CandidateOptions& options, const Normalizer& n) {
  if (options.max_len == 0) {
    throw Error(ErrorCode::kInvalidArgument, "candidate max_len must be >= 1");
  }
  const StopwordList& stoplist = options.stoplist();
  std::vector<bool> usable(tokens.size(), false);
  std::vector<std::string> norm(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!tokens[i].is_word() || stoplist.contains(tokens[i].surface)) continue;
    norm[i] = n.normalize(tokens[i].surface);
    usable[i] = !norm[i].empty();
  }

  std::vector<CandidateOccurrence> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!usable[i]) continue;
    std::string surface;
    std::string key;
    for (std::size_t len = 1; len <= options.max_len; ++len) {
      const std::size_t j = i + len - 1;
      if (j >= tokens.size() || !usable[j]) break;
      if (sentences.sentence_of_token[j] != sentences.sentence_of_token[i]) break;
      if (len > 1) {
        surface.push_back(' ');
        key.push_back(' ');
      }
      surface += tokens[j].surface;
      key += norm[j];
      out.push_back(CandidateOccurrence{
          i, len, sentences.sentence_of_token[i], surface, key});
    }
  }
  return out;
}

std::vector<Candidate> generate_candidates(std::string_view text,
                                           const CandidateOptions& options,
                                           const Normalizer& n) {
  const auto tokens = tokenize(text);
  const auto sentences = assign_sentences(tokens);
  return internal::merge_occurrences(
      candidate_occurrences(tokens, sentences, options, n), nullptr);
}

ExtractionResult extract_termfreq(const Document& doc, std::size_t k,
                                  const Normalizer& n,
                                  const TermFreqOptions& options) {
  internal::require_text(doc);
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  const auto tokens = tokenize(doc.text);
  const auto sentences = assign_sentences(tokens);

  std::unordered_map<std::string, std::size_t> freq;
  for (const Token& t : tokens) {
    if (t.is_word()) ++freq[n.normalize(t.surface)];
  }

  std::vector<Candidate> candidates = internal::merge_occurrences(
      candidate_occurrences(tokens, sentences, options.candidates, n), nullptr);
  for (Candidate& c : candidates) {
    std::size_t sum = 0;
    std::string_view key = c.normalized;
    while (!key.empty()) {
      const auto sp = key.find(' ');
      sum += freq[std::string(key.substr(0, sp))];
      key = sp == std::string_view::npos ? std::string_view{} : key.substr(sp + 1);
    }
    c.score = static_cast<double>(sum * c.length);
    c.surface = c.normalized;
  }
  // Candidates are in first-occurrence order, so a stable sort keeps the
  // earlier phrase first among equal scores.
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return a.score > b.score;
                   });
  if (candidates.size() > k) candidates.resize(k);
  return {ExtractorKind::kTermFreq, ScoreDirection::kHigherBetter,
          std::move(candidates)};
}

double levenshtein_similarity(std::string_view a, std::string_view b) {
  const std::u32string x = utf8::to_u32(a);
  const std::u32string y = utf8::to_u32(b);
  const std::size_t longest = std::max(x.size(), y.size());
  if (longest == 0) return 1.0;
  std::vector<std::size_t> prev(y.size() + 1), cur(y.size() + 1);
  for (std::size_t j = 0; j <= y.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= y.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (x[i - 1] == y[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return 1.0 - static_cast<double>(prev[y.size()]) / static_cast<double>(longest);
}

ExtractionResult extract_embedrank(const Document& doc, std::size_t k,
                                   const EmbeddingProvider& provider,
                                   const Normalizer& n,
                                   const EmbedRankOptions& options) {
  internal::require_text(doc);
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  if (!(options.diversity >= 0.0 && options.diversity < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "diversity must lie in [0, 1)");
  }
  std::vector<Candidate> candidates =
      generate_candidates(doc.text, options.candidates, n);
  if (candidates.empty()) {
    return {ExtractorKind::kEmbedRank, ScoreDirection::kHigherBetter, {}};
  }

  std::vector<std::string> surfaces;
  surfaces.reserve(candidates.size());
  for (const Candidate& c : candidates) surfaces.push_back(c.surface);
  const std::vector<Vector> vectors = provider.embed_texts(surfaces);
  const Vector doc_vector = provider.embed_text(doc.text);

  std::vector<double> relevance(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    relevance[i] = cosine(vectors[i], doc_vector);
  }
  const auto order =
      mmr_select(relevance, k, options.diversity, [&](std::size_t i, std::size_t j) {
        return cosine(vectors[i], vectors[j]);
      });

  ExtractionResult result{ExtractorKind::kEmbedRank,
                          ScoreDirection::kHigherBetter, {}};
  for (std::size_t i : order) {
    Candidate c = candidates[i];
    c.score = relevance[i];
    result.ranking.push_back(std::move(c));
  }
  return result;
}

}  // namespace kpe
