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

#include "kpe/corpus.hpp"

#include <cmath>
#include <unordered_set>

#include "json.hpp"
#include "kpe/error.hpp"
#include "kpe/io.hpp"
#include "kpe/parallel.hpp"
#include "text_util.hpp"

namespace kpe {
namespace {

using nlohmann::json;

Error malformed(std::size_t line, const std::string& what,
                const std::string& source) {
  std::string prefix = source.empty() ? "" : source + ":";
  return Error(ErrorCode::kMalformedRecord,
               prefix + std::to_string(line) + ": " + what, source, line);
}

// Trims keyphrases in place and checks the per-document invariants.
void validate(Document& doc, std::size_t line, const std::string& source) {
  if (doc.id.empty()) throw malformed(line, "empty id", source);
  if (trim(doc.text).empty()) throw malformed(line, "empty text", source);
  if (doc.keyphrases.empty()) {
    throw malformed(line, "empty keyphrase list for " + doc.id, source);
  }
  for (std::string& k : doc.keyphrases) {
    k = std::string(trim(k));
    if (k.empty()) throw malformed(line, "blank keyphrase in " + doc.id, source);
  }
}

Document parse_document(std::string_view line, std::size_t line_no,
                        const std::string& source) {
  json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    throw malformed(line_no, "not a JSON object", source);
  }
  const auto string_field = [&](const char* key) -> std::string {
    auto it = j.find(key);
    if (it == j.end() || !it->is_string()) {
      throw malformed(line_no, std::string("missing string field '") + key + "'",
                      source);
    }
    return it->get<std::string>();
  };
  Document doc;
  doc.id = string_field("id");
  doc.text = string_field("text");
  doc.domain = string_field("domain");
  const std::string split = string_field("split");
  const auto parsed = parse_split(split);
  if (!parsed) throw malformed(line_no, "unknown split '" + split + "'", source);
  doc.split = *parsed;
  auto kp = j.find("keyphrases");
  if (kp == j.end() || !kp->is_array()) {
    throw malformed(line_no, "missing array field 'keyphrases'", source);
  }
  for (const json& k : *kp) {
    if (!k.is_string()) throw malformed(line_no, "non-string keyphrase", source);
    doc.keyphrases.push_back(k.get<std::string>());
  }
  validate(doc, line_no, source);
  return doc;
}

}  // namespace

std::string_view split_name(Split split) {
  return split == Split::kTrain ? "train" : "test";
}

std::optional<Split> parse_split(std::string_view name) {
  if (name == "train") return Split::kTrain;
  if (name == "test") return Split::kTest;
  return std::nullopt;
}

Corpus::Corpus(std::string name, std::vector<Document> documents)
    : name_(std::move(name)), documents_(std::move(documents)) {
  if (documents_.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "corpus '" + name_ + "' is empty",
                name_);
  }
  for (std::size_t i = 0; i < documents_.size(); ++i) {
    validate(documents_[i], i + 1, name_);
    if (!index_.emplace(documents_[i].id, i).second) {
      throw Error(ErrorCode::kDuplicateId,
                  "duplicate document id '" + documents_[i].id + "'",
                  documents_[i].id, i + 1);
    }
  }
}

const Document* Corpus::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  return it == index_.end() ? nullptr : &documents_[it->second];
}

std::vector<const Document*> Corpus::split(Split which) const {
  std::vector<const Document*> out;
  for (const Document& d : documents_) {
    if (d.split == which) out.push_back(&d);
  }
  return out;
}

Corpus parse_corpus(std::string_view contents, std::string name) {
  std::vector<Document> docs;
  std::unordered_set<std::string> ids;
  std::size_t line_no = 0;
  for_each_line(contents, [&](std::string_view line) {
    ++line_no;
    if (trim(line).empty()) return;
    Document doc = parse_document(line, line_no, name);
    if (!ids.insert(doc.id).second) {
      throw Error(ErrorCode::kDuplicateId,
                  name + ":" + std::to_string(line_no) +
                      ": duplicate document id '" + doc.id + "'",
                  doc.id, line_no);
    }
    docs.push_back(std::move(doc));
  });
  if (docs.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "corpus '" + name + "' is empty", name);
  }
  return Corpus(std::move(name), std::move(docs));
}

Corpus load_corpus(const std::filesystem::path& path) {
  return parse_corpus(read_file(path), path.string());
}

bool contains_sequence(std::span<const std::string> haystack,
                       std::span<const std::string> needle) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < needle.size(); ++j) {
      if (haystack[i + j] != needle[j]) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

bool phrase_appears_in(std::string_view phrase, std::string_view text,
                       const Normalizer& n) {
  const auto needle = normalized_tokens(phrase, n);
  if (needle.empty()) return false;
  return contains_sequence(normalized_tokens(text, n), needle);
}

MeanStd mean_std(std::span<const double> values) {
  if (values.empty()) return {};
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) sq += (v - mean) * (v - mean);
  return {mean, std::sqrt(sq / static_cast<double>(values.size()))};
}

CorpusStats corpus_stats(const Corpus& corpus, const Normalizer& n,
                         std::size_t jobs) {
  const auto docs = corpus.documents();
  struct PerDoc {
    double sentences = 0;
    double tokens = 0;
    std::size_t absent = 0;
  };
  std::vector<PerDoc> per(docs.size());
  parallel_for(docs.size(), jobs, [&](std::size_t i) {
    const Document& d = docs[i];
    const auto tokens = tokenize(d.text);
    per[i].tokens = static_cast<double>(tokens.size());
    per[i].sentences =
        static_cast<double>(assign_sentences(tokens).sentence_count);
    const auto text_key = normalized_tokens(d.text, n);
    for (const std::string& k : d.keyphrases) {
      if (!contains_sequence(text_key, normalized_tokens(k, n))) {
        ++per[i].absent;
      }
    }
  });

  CorpusStats stats;
  std::vector<double> sentences, tokens, keyphrases;
  std::size_t absent = 0;
  std::size_t total = 0;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    (docs[i].split == Split::kTrain ? stats.train_size : stats.test_size)++;
    sentences.push_back(per[i].sentences);
    tokens.push_back(per[i].tokens);
    keyphrases.push_back(static_cast<double>(docs[i].keyphrases.size()));
    absent += per[i].absent;
    total += docs[i].keyphrases.size();
  }
  stats.sentences = mean_std(sentences);
  stats.tokens = mean_std(tokens);
  stats.keyphrases = mean_std(keyphrases);
  stats.absent_pct = total == 0 ? 0.0
                                : 100.0 * static_cast<double>(absent) /
                                      static_cast<double>(total);
  return stats;
}

}  // namespace kpe
