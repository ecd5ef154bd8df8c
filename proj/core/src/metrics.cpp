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

#include "kpe/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <unordered_map>

#include "kpe/corpus.hpp"
#include "kpe/error.hpp"
#include "kpe/log.hpp"
#include "text_util.hpp"

namespace kpe {
namespace {

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::vector<std::string> normalized_words(std::string_view text,
                                          const Normalizer& n) {
  std::vector<std::string> out;
  for (const std::string& w : word_tokens(text)) {
    std::string norm = n.normalize(w);
    if (!norm.empty()) out.push_back(std::move(norm));
  }
  return out;
}

}  // namespace

MetricScore MetricScore::from_pr(double precision, double recall) {
  const double sum = precision + recall;
  return {precision, recall, sum > 0.0 ? 2.0 * precision * recall / sum : 0.0};
}

std::string join_keyphrases(std::span<const std::string> phrases) {
  std::string out;
  for (std::size_t i = 0; i < phrases.size(); ++i) {
    if (i > 0) out += ", ";
    out += phrases[i];
  }
  return out;
}

MetricScore rouge1(std::span<const std::string> candidates,
                   std::span<const std::string> references,
                   const Normalizer& n) {
  const auto cand = normalized_words(join_keyphrases(candidates), n);
  const auto ref = normalized_words(join_keyphrases(references), n);
  if (cand.empty() || ref.empty()) {
    if (cand.empty() && ref.empty()) {
      warn("rouge1: candidate and reference lists are both empty; scoring 0");
    }
    return {};
  }
  std::unordered_map<std::string_view, std::size_t> ref_counts;
  for (const std::string& w : ref) ++ref_counts[w];
  std::size_t overlap = 0;
  for (const std::string& w : cand) {
    auto it = ref_counts.find(w);
    if (it != ref_counts.end() && it->second > 0) {
      --it->second;
      ++overlap;
    }
  }
  return MetricScore::from_pr(ratio(overlap, cand.size()),
                              ratio(overlap, ref.size()));
}

MetricScore fullmatch_f1(std::span<const std::string> candidates,
                         std::span<const std::string> references,
                         const Normalizer& n) {
  // Phrases without any word or number token normalize to "" and are
  // dropped.
  const auto to_set = [&](std::span<const std::string> phrases) {
    std::set<std::string> out;
    for (const std::string& p : phrases) {
      std::string key = normalize_phrase(p, n);
      if (!key.empty()) out.insert(std::move(key));
    }
    return out;
  };
  const auto cand = to_set(candidates);
  const auto ref = to_set(references);
  if (cand.empty() && ref.empty()) return {1.0, 1.0, 1.0};
  if (cand.empty() || ref.empty()) return {};
  std::size_t matches = 0;
  for (const std::string& c : cand) matches += ref.count(c);
  return MetricScore::from_pr(ratio(matches, cand.size()),
                              ratio(matches, ref.size()));
}

MetricScore bertscore_vectors(std::span<const TokenVector> candidate,
                              std::span<const TokenVector> reference) {
  if (candidate.empty() || reference.empty()) return {};
  std::vector<double> best_for_cand(candidate.size(), -1.0);
  std::vector<double> best_for_ref(reference.size(), -1.0);
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    for (std::size_t j = 0; j < reference.size(); ++j) {
      const double sim = cosine(candidate[i].vector, reference[j].vector);
      best_for_cand[i] = std::max(best_for_cand[i], sim);
      best_for_ref[j] = std::max(best_for_ref[j], sim);
    }
  }
  const auto mean = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
  };
  // Cosines can be negative; precision and recall are floored at 0.
  const double p = std::clamp(mean(best_for_cand), 0.0, 1.0);
  const double r = std::clamp(mean(best_for_ref), 0.0, 1.0);
  return MetricScore::from_pr(p, r);
}

MetricScore bertscore(std::span<const std::string> candidates,
                      std::span<const std::string> references,
                      const EmbeddingProvider& provider) {
  const std::string cand = join_keyphrases(candidates);
  const std::string ref = join_keyphrases(references);
  if (word_tokens(cand).empty() || word_tokens(ref).empty()) return {};
  return bertscore_vectors(provider.embed_tokens(cand),
                           provider.embed_tokens(ref));
}

std::vector<std::string> truncate_topk(std::span<const std::string> phrases,
                                       std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "top-k cutoff must be >= 1");
  const std::size_t n = std::min(k, phrases.size());
  return {phrases.begin(), phrases.begin() + static_cast<std::ptrdiff_t>(n)};
}

double abstractness(std::span<const std::string> predictions,
                    std::string_view doc_text, const Normalizer& n) {
  if (predictions.empty()) return 0.0;
  const auto text = normalized_tokens(doc_text, n);
  std::size_t absent = 0;
  for (const std::string& p : predictions) {
    if (!contains_sequence(text, normalized_tokens(p, n))) ++absent;
  }
  return ratio(absent, predictions.size());
}

double aggregate(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::kEmptyInput, "aggregate of no values");
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

MetricScore aggregate(std::span<const MetricScore> scores) {
  if (scores.empty()) throw Error(ErrorCode::kEmptyInput, "aggregate of no scores");
  MetricScore out;
  for (const MetricScore& s : scores) {
    out.precision += s.precision;
    out.recall += s.recall;
    out.f1 += s.f1;
  }
  const double n = static_cast<double>(scores.size());
  out.precision /= n;
  out.recall /= n;
  out.f1 /= n;
  return out;
}

void TopKConfig::validate() const {
  for (std::size_t i = 0; i < cutoffs.size(); ++i) {
    if (cutoffs[i] == 0 || (i > 0 && cutoffs[i] <= cutoffs[i - 1])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "top-k cutoffs must be strictly increasing and >= 1");
    }
  }
}

std::vector<std::size_t> parse_cutoffs(std::string_view text) {
  std::vector<std::size_t> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    std::size_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bad top-k cutoff '" + std::string(item) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  TopKConfig{out, true}.validate();
  return out;
}

}  // namespace kpe
