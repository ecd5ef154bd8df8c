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

// Abstract/keyphrase corpora and their descriptive statistics.
//
// Corpus files are UTF-8 JSON lines, one document per line:
//   {"id": "...", "text": "...", "keyphrases": ["...", ...],
//    "domain": "...", "split": "train" | "test"}
// Unknown fields are ignored; blank lines are skipped.

#ifndef KPE_CORPUS_HPP_
#define KPE_CORPUS_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kpe/textproc.hpp"

namespace kpe {

enum class Split { kTrain, kTest };

std::string_view split_name(Split split);
std::optional<Split> parse_split(std::string_view name);

struct Document {
  std::string id;
  std::string text;
  std::vector<std::string> keyphrases;
  std::string domain;
  Split split = Split::kTrain;
};

class Corpus {
 public:
  // Validates every document and id uniqueness. Throws Error with
  // kEmptyCorpus, kDuplicateId or kMalformedRecord (line = 1-based index).
  Corpus(std::string name, std::vector<Document> documents);

  const std::string& name() const { return name_; }
  std::span<const Document> documents() const { return documents_; }
  std::size_t size() const { return documents_.size(); }

  // nullptr when absent.
  const Document* find(std::string_view id) const;

  std::vector<const Document*> split(Split which) const;

 private:
  std::string name_;
  std::vector<Document> documents_;
  std::unordered_map<std::string, std::size_t> index_;
};

Corpus load_corpus(const std::filesystem::path& path);
// Same parsing over in-memory JSON lines; `name` labels the corpus.
Corpus parse_corpus(std::string_view contents, std::string name);

// True iff the normalized token sequence of `phrase` occurs contiguously in
// the normalized token sequence of `text`. An empty key never appears.
bool phrase_appears_in(std::string_view phrase, std::string_view text,
                       const Normalizer& n);

// Contiguous-subsequence test on already normalized tokens.
bool contains_sequence(std::span<const std::string> haystack,
                       std::span<const std::string> needle);

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // population standard deviation
};

MeanStd mean_std(std::span<const double> values);

struct CorpusStats {
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  MeanStd sentences;
  MeanStd tokens;  // all tokens, punctuation included
  MeanStd keyphrases;
  double absent_pct = 0.0;  // in [0, 100]
};

// Statistics over train and test documents together.
CorpusStats corpus_stats(const Corpus& corpus, const Normalizer& n,
                         std::size_t jobs = 1);

}  // namespace kpe

#endif  // KPE_CORPUS_HPP_
