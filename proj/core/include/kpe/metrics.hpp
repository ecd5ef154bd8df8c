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

// Keyphrase-list metrics. Lists are compared either as comma-joined strings
// (ROUGE-1, BERTScore) or as sets of normalized phrases (full-match F1).
// ROUGE-1 and full-match F1 take a Normalizer; BERTScore works on raw
// surfaces.

#ifndef KPE_METRICS_HPP_
#define KPE_METRICS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kpe/embed.hpp"
#include "kpe/textproc.hpp"

namespace kpe {

struct MetricScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  // f1 = 2PR / (P + R), or 0 when P + R = 0.
  static MetricScore from_pr(double precision, double recall);
};

// Phrases joined with ", ".
std::string join_keyphrases(std::span<const std::string> phrases);

// Unigram overlap with clipped counts over normalized word tokens of the
// joined lists. An empty side gives all zeros.
MetricScore rouge1(std::span<const std::string> candidates,
                   std::span<const std::string> references,
                   const Normalizer& n);

// Exact matches between de-duplicated sets of normalized phrases. Both sides
// empty gives 1; one side empty gives 0.
MetricScore fullmatch_f1(std::span<const std::string> candidates,
                         std::span<const std::string> references,
                         const Normalizer& n);

// Greedy max-cosine token matching between the joined lists, without idf
// weighting or baseline rescaling. Precision and recall are mean best
// cosines clamped to [0, 1]. An empty side gives all zeros.
MetricScore bertscore(std::span<const std::string> candidates,
                      std::span<const std::string> references,
                      const EmbeddingProvider& provider);

// Same matching over precomputed token vectors.
MetricScore bertscore_vectors(std::span<const TokenVector> candidate,
                              std::span<const TokenVector> reference);

// First min(k, size) phrases. Throws kInvalidArgument for k = 0.
std::vector<std::string> truncate_topk(std::span<const std::string> phrases,
                                       std::size_t k);

// Fraction of predictions that do not appear in the text; 0 for an empty
// list.
double abstractness(std::span<const std::string> predictions,
                    std::string_view doc_text, const Normalizer& n);

// Arithmetic means. Throw kEmptyInput for empty input.
double aggregate(std::span<const double> values);
MetricScore aggregate(std::span<const MetricScore> scores);

struct TopKConfig {
  std::vector<std::size_t> cutoffs = {5, 10, 15};
  bool untruncated = true;  // also evaluate the full list

  // Throws kInvalidArgument unless cutoffs are strictly increasing and >= 1.
  void validate() const;
};

// Parses "5,10,15". Throws kInvalidArgument.
std::vector<std::size_t> parse_cutoffs(std::string_view text);

}  // namespace kpe

#endif  // KPE_METRICS_HPP_
