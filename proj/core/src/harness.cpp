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

#include "kpe/harness.hpp"

#include <algorithm>
#include <fstream>
#include <tuple>

#include "json.hpp"
#include "kpe/error.hpp"
#include "kpe/io.hpp"
#include "kpe/log.hpp"
#include "kpe/parallel.hpp"
#include "text_util.hpp"

namespace kpe {
namespace {

using nlohmann::json;

Error malformed(const std::string& source, std::size_t line,
                const std::string& what) {
  return Error(ErrorCode::kMalformedRecord,
               source + ":" + std::to_string(line) + ": " + what, source, line);
}

PredictionSet parse_header(std::string_view line, const std::string& source) {
  json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    throw malformed(source, 1, "header is not a JSON object");
  }
  PredictionSet set;
  const auto field = [&](const char* key) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_string() || it->get<std::string>().empty()) {
      throw malformed(source, 1, std::string("header lacks string field '") + key + "'");
    }
    return it->get<std::string>();
  };
  set.model_id = field("model_id");
  set.train_domain = field("train_domain");
  set.test_domain = field("test_domain");
  return set;
}

std::vector<std::string> split_joined(std::string_view joined) {
  std::vector<std::string> out;
  if (joined.empty()) return out;
  for (;;) {
    const auto sep = joined.find(", ");
    out.emplace_back(joined.substr(0, sep));
    if (sep == std::string_view::npos) break;
    joined.remove_prefix(sep + 2);
  }
  return out;
}

}  // namespace

PredictionSet parse_predictions(std::string_view contents, const Corpus& corpus,
                                const std::string& source) {
  std::optional<PredictionSet> set;
  std::size_t line_no = 0;
  for_each_line(contents, [&](std::string_view line) {
    ++line_no;
    if (trim(line).empty()) return;
    if (!set) {
      if (line_no != 1) throw malformed(source, line_no, "header must be line 1");
      set = parse_header(line, source);
      return;
    }
    json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object()) {
      throw malformed(source, line_no, "not a JSON object");
    }
    auto id = j.find("id");
    auto kp = j.find("keyphrases");
    if (id == j.end() || !id->is_string() || kp == j.end() || !kp->is_array()) {
      throw malformed(source, line_no, "expected fields id and keyphrases");
    }
    const std::string doc_id = id->get<std::string>();
    if (corpus.find(doc_id) == nullptr) {
      throw Error(ErrorCode::kUnknownDocument,
                  source + ":" + std::to_string(line_no) + ": document '" +
                      doc_id + "' is not in corpus " + corpus.name(),
                  doc_id, line_no);
    }
    std::vector<std::string> phrases;
    for (const json& k : *kp) {
      if (!k.is_string()) throw malformed(source, line_no, "non-string keyphrase");
      phrases.push_back(k.get<std::string>());
    }
    if (!set->predictions.emplace(doc_id, std::move(phrases)).second) {
      throw malformed(source, line_no, "repeated document id '" + doc_id + "'");
    }
  });
  if (!set) throw malformed(source, 1, "missing header line");
  for (const Document* doc : corpus.split(Split::kTest)) {
    if (!set->predictions.contains(doc->id)) {
      throw Error(ErrorCode::kMissingDocument,
                  source + ": no predictions for test document '" + doc->id + "'",
                  doc->id);
    }
  }
  return std::move(*set);
}

PredictionSet load_predictions(const std::filesystem::path& path,
                               const Corpus& corpus) {
  return parse_predictions(read_file(path), corpus, path.string());
}

PredictionSet read_prediction_header(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string(), path.string());
  std::string line;
  std::getline(in, line);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return parse_header(line, path.string());
}

std::string serialize_predictions(const PredictionSet& set,
                                  std::optional<std::string_view> extractor) {
  std::string out;
  json header = {{"model_id", set.model_id},
                 {"train_domain", set.train_domain},
                 {"test_domain", set.test_domain}};
  out += header.dump() + "\n";
  for (const auto& [id, phrases] : set.predictions) {
    json rec;
    rec["id"] = id;
    if (extractor) rec["extractor"] = std::string(*extractor);
    rec["keyphrases"] = phrases;
    out += rec.dump() + "\n";
  }
  return out;
}

EvalReport evaluate(const PredictionSet& predictions, const Corpus& corpus,
                    const Normalizer& n, const EmbeddingProvider* provider,
                    const EvalOptions& options) {
  options.topk.validate();
  std::vector<std::string> labels;
  for (std::size_t k : options.topk.cutoffs) labels.push_back(std::to_string(k));
  if (options.topk.untruncated) labels.emplace_back(kFullCutoff);
  if (labels.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "no cutoffs to evaluate (empty cutoff list and untruncated off)");
  }

  const std::vector<const Document*> docs = corpus.split(Split::kTest);
  if (docs.empty()) {
    throw Error(ErrorCode::kEmptyInput,
                "corpus " + corpus.name() + " has no test documents", corpus.name());
  }
  const std::size_t num_labels = labels.size();
  std::vector<DocumentScores> scores(docs.size() * num_labels);
  std::vector<double> counts(docs.size());
  std::vector<double> abstract(docs.size());

  parallel_for(docs.size(), options.jobs, [&](std::size_t i) {
    const Document& doc = *docs[i];
    auto it = predictions.predictions.find(doc.id);
    if (it == predictions.predictions.end()) {
      throw Error(ErrorCode::kMissingDocument,
                  "no predictions for test document '" + doc.id + "'", doc.id);
    }
    const std::vector<std::string>& full = it->second;
    counts[i] = static_cast<double>(full.size());
    abstract[i] = abstractness(full, doc.text, n);
    for (std::size_t l = 0; l < num_labels; ++l) {
      const std::vector<std::string> cut =
          l < options.topk.cutoffs.size()
              ? truncate_topk(full, options.topk.cutoffs[l])
              : full;
      DocumentScores& s = scores[i * num_labels + l];
      s.id = doc.id;
      s.cutoff = labels[l];
      s.rouge1 = rouge1(cut, doc.keyphrases, n);
      s.fullmatch = fullmatch_f1(cut, doc.keyphrases, n);
      if (provider) s.bertscore = bertscore(cut, doc.keyphrases, *provider);
    }
  });

  EvalReport report;
  report.model_id = predictions.model_id;
  report.train_domain = predictions.train_domain;
  report.test_domain = predictions.test_domain;

  const auto add_rows = [&](std::string_view metric, auto&& pick) {
    for (std::size_t l = 0; l < num_labels; ++l) {
      std::vector<double> values;
      values.reserve(docs.size());
      for (std::size_t i = 0; i < docs.size(); ++i) {
        values.push_back(pick(scores[i * num_labels + l]));
      }
      report.rows.push_back(EvalRow{report.model_id, report.train_domain,
                                    report.test_domain, labels[l],
                                    std::string(metric), aggregate(values)});
    }
  };
  if (provider) {
    add_rows("BS", [](const DocumentScores& s) { return s.bertscore->f1; });
  }
  add_rows("R1", [&](const DocumentScores& s) {
    switch (options.rouge) {
      case RougeVariant::kRecall: return s.rouge1.recall;
      case RougeVariant::kPrecision: return s.rouge1.precision;
      case RougeVariant::kF: break;
    }
    return s.rouge1.f1;
  });
  add_rows("F1", [](const DocumentScores& s) { return s.fullmatch.f1; });

  report.generated = GeneratedStats{mean_std(counts), aggregate(abstract)};
  report.per_document = std::move(scores);
  return report;
}

std::vector<EvalReport> cross_matrix(std::span<const PredictionSet> sets,
                                     const std::map<std::string, Corpus>& corpora,
                                     const Normalizer& n,
                                     const EmbeddingProvider* provider,
                                     const EvalOptions& options) {
  std::vector<const PredictionSet*> ordered;
  for (const PredictionSet& s : sets) {
    if (!corpora.contains(s.test_domain)) {
      throw Error(ErrorCode::kMissingCorpus,
                  "no corpus for test domain '" + s.test_domain + "' (model " +
                      s.model_id + ")",
                  s.test_domain);
    }
    ordered.push_back(&s);
  }
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const PredictionSet* a, const PredictionSet* b) {
                     return std::tie(a->train_domain, a->test_domain, a->model_id) <
                            std::tie(b->train_domain, b->test_domain, b->model_id);
                   });
  std::vector<EvalReport> reports;
  reports.reserve(ordered.size());
  for (const PredictionSet* s : ordered) {
    reports.push_back(evaluate(*s, corpora.at(s->test_domain), n, provider, options));
  }
  return reports;
}

std::optional<FinetuneFormat> parse_finetune_format(std::string_view name) {
  if (name == "causal") return FinetuneFormat::kCausal;
  if (name == "seq2seq") return FinetuneFormat::kSeq2Seq;
  return std::nullopt;
}

std::string render_finetune(const Corpus& corpus, FinetuneFormat format,
                            Split split) {
  std::string out;
  for (const Document& doc : corpus.documents()) {
    if (doc.split != split) continue;
    for (const std::string& k : doc.keyphrases) {
      if (k.find(", ") != std::string::npos) {
        warn("document '" + doc.id + "': keyphrase \"" + k +
             "\" contains \", \" and will not survive the comma-joined format");
      }
    }
    const std::string joined = join_keyphrases(doc.keyphrases);
    if (format == FinetuneFormat::kCausal) {
      if (doc.text.find('\n') != std::string::npos) {
        warn("document '" + doc.id + "': text contains a newline; the causal "
             "line format will split it");
      }
      out += doc.text;
      out += kKeyphrasesMarker;
      if (split == Split::kTrain) {
        out += joined;
        out += kEndMarker;
      }
      out += '\n';
    } else {
      json rec = {{"input", doc.text}, {"target", joined}};
      out += rec.dump() + "\n";
    }
  }
  return out;
}

void export_finetune(const Corpus& corpus, FinetuneFormat format, Split split,
                     const std::filesystem::path& out_path) {
  write_file_atomic(out_path, render_finetune(corpus, format, split));
}

CausalRecord parse_causal_line(std::string_view line) {
  const auto marker = line.rfind(kKeyphrasesMarker);
  if (marker == std::string_view::npos) {
    throw Error(ErrorCode::kMalformedRecord, "causal line lacks the keyphrases marker");
  }
  CausalRecord rec;
  rec.text = std::string(line.substr(0, marker));
  std::string_view rest = line.substr(marker + kKeyphrasesMarker.size());
  if (rest.ends_with(kEndMarker)) {
    rest.remove_suffix(kEndMarker.size());
    rec.has_end = true;
  } else if (!rest.empty()) {
    throw Error(ErrorCode::kMalformedRecord, "causal line lacks the end marker");
  }
  rec.keyphrases = split_joined(rest);
  return rec;
}

}  // namespace kpe
