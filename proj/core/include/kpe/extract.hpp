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

// Unsupervised keyphrase extractors sharing one candidate stage:
//   termfreq   within-document term frequency weighted by phrase length
//   yake       YAKE statistical features, lower score is better
//   embedrank  cosine to the document embedding, optional MMR diversity

#ifndef KPE_EXTRACT_HPP_
#define KPE_EXTRACT_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kpe/corpus.hpp"
#include "kpe/embed.hpp"
#include "kpe/stopwords.hpp"
#include "kpe/textproc.hpp"

namespace kpe {

struct Candidate {
  std::string surface;
  std::string normalized;
  std::size_t start_token = 0;  // index into tokenize(text)
  std::size_t length = 0;       // number of word tokens
  double score = 0.0;
};

enum class ExtractorKind { kTermFreq, kYake, kEmbedRank };
enum class ScoreDirection { kLowerBetter, kHigherBetter };

std::string_view extractor_name(ExtractorKind kind);
std::optional<ExtractorKind> parse_extractor(std::string_view name);

struct ExtractionResult {
  ExtractorKind extractor = ExtractorKind::kTermFreq;
  ScoreDirection direction = ScoreDirection::kHigherBetter;
  std::vector<Candidate> ranking;  // best first

  std::vector<std::string> surfaces() const;
};

struct CandidateOptions {
  std::size_t max_len = 3;
  // Overrides the bundled list for `lang` when set.
  const StopwordList* stopwords = nullptr;
  Lang lang = Lang::kRu;

  const StopwordList& stoplist() const {
    return stopwords ? *stopwords : StopwordList::bundled(lang);
  }
};

// Every occurrence of a candidate phrase, in text order, before merging.
struct CandidateOccurrence {
  std::size_t start_token = 0;
  std::size_t length = 0;
  std::size_t sentence = 0;
  std::string surface;     // word surfaces joined by single spaces
  std::string normalized;  // normalize_phrase(surface)
};

// Contiguous runs of 1..max_len word tokens with no stopword, inside one
// sentence and not interrupted by punctuation or numbers.
std::vector<CandidateOccurrence> candidate_occurrences(
    const std::vector<Token>& tokens, const SentenceAssignment& sentences,
    const CandidateOptions& options, const Normalizer& n);

// Candidates merged by normalized form, keeping the first occurrence's
// surface and position. Scores are zero.
std::vector<Candidate> generate_candidates(std::string_view text,
                                           const CandidateOptions& options,
                                           const Normalizer& n);

struct TermFreqOptions {
  CandidateOptions candidates;
};

// score = (sum of document frequencies of the phrase's normalized tokens)
//         * phrase length; ties go to the earlier first occurrence. Output
// surfaces are the normalized forms. Throws kEmptyDocument.
ExtractionResult extract_termfreq(const Document& doc, std::size_t k,
                                  const Normalizer& n,
                                  const TermFreqOptions& options = {});

struct YakeOptions {
  CandidateOptions candidates;
  std::size_t window = 1;
  double dedup_threshold = 0.8;  // prune when similarity exceeds this
  bool deduplicate = true;
};

// Per-term features, exposed for inspection and tests.
struct YakeTermFeatures {
  std::string term;
  std::size_t tf = 0;
  bool stopword = false;
  double casing = 0.0;
  double position = 0.0;
  double frequency = 0.0;
  double relatedness = 0.0;
  double sentence_spread = 0.0;
  double score = 0.0;
};

std::vector<YakeTermFeatures> yake_term_features(std::string_view text,
                                                 const YakeOptions& options,
                                                 const Normalizer& n);

// Throws kEmptyDocument, kInvalidArgument (max_len outside 1..4, window 0).
ExtractionResult extract_yake(const Document& doc, std::size_t k,
                              const Normalizer& n,
                              const YakeOptions& options = {});

// 1 - levenshtein(a, b) / max(|a|, |b|) over code points; 1 for two empty
// strings.
double levenshtein_similarity(std::string_view a, std::string_view b);

struct EmbedRankOptions {
  CandidateOptions candidates;
  double diversity = 0.0;  // in [0, 1)
};

// Throws kEmptyDocument, kInvalidArgument; provider errors propagate.
ExtractionResult extract_embedrank(const Document& doc, std::size_t k,
                                   const EmbeddingProvider& provider,
                                   const Normalizer& n,
                                   const EmbedRankOptions& options = {});

// Maximal marginal relevance selection. relevance[i] is the similarity of
// candidate i to the document, pairwise(i, j) the candidate-candidate
// similarity. Returns up to k indices in selection order; ties go to the
// lower index. With diversity 0 this is a stable sort by relevance.
template <typename Pairwise>
std::vector<std::size_t> mmr_select(std::span<const double> relevance,
                                    std::size_t k, double diversity,
                                    Pairwise&& pairwise);

}  // namespace kpe

#include "kpe/internal/mmr.inl"

#endif  // KPE_EXTRACT_HPP_
