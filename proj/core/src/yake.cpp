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

// YAKE term and phrase scoring.
//
// Term features, computed per normalized term t:
//   casing       max(#acronym, #proper) / (1 + ln tf)
//                acronym: every letter uppercase and at least two letters;
//                proper: leading uppercase letter, not sentence-initial
//   position     ln(ln(3 + median of the distinct sentence indices of t))
//   frequency    tf / (mean tf + std tf), over non-stopword terms
//   relatedness  1 + (DL + DR) * tf / max tf, where DL (DR) is the number
//                of distinct left (right) neighbours within `window` divided
//                by the total left (right) co-occurrences
//   spread       sentences containing t / total sentences
//   S(t)         relatedness * position /
//                (casing + frequency / relatedness + spread / relatedness)
// Phrase score: prod S(t) / (tf(phrase) * (1 + sum S(t))), lower is better.
// Co-occurrence windows never cross punctuation, numbers or sentences.

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>

#include "extract_internal.hpp"
#include "kpe/error.hpp"
#include "kpe/extract.hpp"
#include "kpe/unicode.hpp"

namespace kpe {
namespace {

bool is_acronym(std::string_view word) {
  std::size_t letters = 0;
  for (std::size_t pos = 0; pos < word.size();) {
    const utf8::Decoded d = utf8::decode(word, pos);
    pos += d.length;
    if (!utf8::is_letter(d.cp)) continue;
    if (!utf8::is_upper(d.cp)) return false;
    ++letters;
  }
  return letters >= 2;
}

bool starts_upper(std::string_view word) {
  return !word.empty() && utf8::is_upper(utf8::decode(word, 0).cp);
}

double median(const std::set<std::size_t>& values) {
  std::vector<std::size_t> v(values.begin(), values.end());
  const std::size_t m = v.size() / 2;
  if (v.size() % 2 == 1) return static_cast<double>(v[m]);
  return (static_cast<double>(v[m - 1]) + static_cast<double>(v[m])) / 2.0;
}

struct TermStats {
  std::size_t tf = 0;
  std::size_t acronym = 0;
  std::size_t proper = 0;
  bool stopword = false;
  std::set<std::size_t> sentences;
  std::map<std::string, std::size_t> left;
  std::map<std::string, std::size_t> right;
};

struct YakeModel {
  std::vector<Token> tokens;
  SentenceAssignment sentences;
  std::vector<std::string> term_of_token;  // empty for non-words
  std::vector<std::string> order;          // terms by first occurrence
  std::unordered_map<std::string, TermStats> stats;
  std::unordered_map<std::string, YakeTermFeatures> features;
};

void validate(const YakeOptions& options) {
  if (options.candidates.max_len < 1 || options.candidates.max_len > 4) {
    throw Error(ErrorCode::kInvalidArgument, "yake max_len must lie in 1..4");
  }
  if (options.window < 1) {
    throw Error(ErrorCode::kInvalidArgument, "yake window must be >= 1");
  }
}

YakeModel build_model(std::string_view text, const YakeOptions& options,
                      const Normalizer& n) {
  YakeModel m;
  m.tokens = tokenize(text);
  m.sentences = assign_sentences(m.tokens);
  const StopwordList& stoplist = options.candidates.stoplist();
  m.term_of_token.resize(m.tokens.size());

  std::size_t block_start = 0;  // first token index of the current block
  for (std::size_t i = 0; i < m.tokens.size(); ++i) {
    const Token& t = m.tokens[i];
    const std::size_t sentence = m.sentences.sentence_of_token[i];
    const bool new_block =
        i == 0 || !m.tokens[i - 1].is_word() ||
        m.sentences.sentence_of_token[i - 1] != sentence;
    if (new_block) block_start = i;
    if (!t.is_word()) continue;

    std::string term = n.normalize(t.surface);
    m.term_of_token[i] = term;
    auto [it, inserted] = m.stats.try_emplace(term);
    if (inserted) m.order.push_back(term);
    TermStats& s = it->second;
    ++s.tf;
    s.stopword = s.stopword || stoplist.contains(t.surface);
    s.sentences.insert(sentence);
    const bool sentence_initial =
        i == 0 || m.sentences.sentence_of_token[i - 1] != sentence ||
        [&] {
          // First word token of its sentence.
          for (std::size_t j = i; j-- > 0;) {
            if (m.sentences.sentence_of_token[j] != sentence) return true;
            if (m.tokens[j].is_word()) return false;
          }
          return true;
        }();
    if (is_acronym(t.surface)) {
      ++s.acronym;
    } else if (starts_upper(t.surface) && !sentence_initial) {
      ++s.proper;
    }

    for (std::size_t w = 1; w <= options.window && w <= i - block_start; ++w) {
      const std::string& left_term = m.term_of_token[i - w];
      ++s.left[left_term];
      ++m.stats[left_term].right[term];
    }
  }

  std::vector<double> valid_tf;
  std::size_t max_tf = 0;
  for (const auto& [term, s] : m.stats) {
    max_tf = std::max(max_tf, s.tf);
    if (!s.stopword) valid_tf.push_back(static_cast<double>(s.tf));
  }
  const MeanStd tf_dist = mean_std(valid_tf);
  const double total_sentences =
      static_cast<double>(std::max<std::size_t>(1, m.sentences.sentence_count));

  const auto dispersion = [](const std::map<std::string, std::size_t>& side) {
    std::size_t total = 0;
    for (const auto& [_, c] : side) total += c;
    return total == 0 ? 0.0
                      : static_cast<double>(side.size()) / static_cast<double>(total);
  };

  for (const std::string& term : m.order) {
    const TermStats& s = m.stats[term];
    YakeTermFeatures f;
    f.term = term;
    f.tf = s.tf;
    f.stopword = s.stopword;
    const double tf = static_cast<double>(s.tf);
    f.casing = static_cast<double>(std::max(s.acronym, s.proper)) / (1.0 + std::log(tf));
    f.position = std::log(std::log(3.0 + median(s.sentences)));
    const double denom = tf_dist.mean + tf_dist.std;
    f.frequency = denom > 0.0 ? tf / denom : 0.0;
    f.relatedness = 1.0 + (dispersion(s.left) + dispersion(s.right)) * tf /
                              static_cast<double>(max_tf);
    f.sentence_spread = static_cast<double>(s.sentences.size()) / total_sentences;
    f.score = (f.relatedness * f.position) /
              (f.casing + f.frequency / f.relatedness +
               f.sentence_spread / f.relatedness);
    m.features.emplace(term, std::move(f));
  }
  return m;
}

}  // namespace

std::vector<YakeTermFeatures> yake_term_features(std::string_view text,
                                                 const YakeOptions& options,
                                                 const Normalizer& n) {
  validate(options);
  YakeModel m = build_model(text, options, n);
  std::vector<YakeTermFeatures> out;
  out.reserve(m.order.size());
  for (const std::string& term : m.order) out.push_back(m.features.at(term));
  return out;
}

ExtractionResult extract_yake(const Document& doc, std::size_t k,
                              const Normalizer& n, const YakeOptions& options) {
  internal::require_text(doc);
  validate(options);
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  const YakeModel m = build_model(doc.text, options, n);

  const auto occurrences =
      candidate_occurrences(m.tokens, m.sentences, options.candidates, n);
  std::vector<std::size_t> counts;
  std::vector<Candidate> candidates =
      internal::merge_occurrences(occurrences, &counts);

  for (std::size_t c = 0; c < candidates.size(); ++c) {
    double product = 1.0;
    double sum = 0.0;
    const Candidate& cand = candidates[c];
    for (std::size_t i = cand.start_token; i < cand.start_token + cand.length; ++i) {
      const double s = m.features.at(m.term_of_token[i]).score;
      product *= s;
      sum += s;
    }
    candidates[c].score =
        product / (static_cast<double>(counts[c]) * (1.0 + sum));
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return a.score < b.score;
                   });

  ExtractionResult result{ExtractorKind::kYake, ScoreDirection::kLowerBetter, {}};
  for (Candidate& c : candidates) {
    if (result.ranking.size() >= k) break;
    if (options.deduplicate) {
      const bool near_duplicate = std::any_of(
          result.ranking.begin(), result.ranking.end(), [&](const Candidate& kept) {
            return levenshtein_similarity(c.normalized, kept.normalized) >
                   options.dedup_threshold;
          });
      if (near_duplicate) continue;
    }
    result.ranking.push_back(std::move(c));
  }
  return result;
}

}  // namespace kpe
