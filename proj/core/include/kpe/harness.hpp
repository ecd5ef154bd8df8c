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

// Evaluation runs over prediction files, cross-domain grids, report
// rendering and fine-tuning exports.
//
// Prediction file (JSON lines):
//   {"model_id": "...", "train_domain": "...", "test_domain": "..."}
//   {"id": "...", "keyphrases": ["...", ...]}
//   ...
// Extractor output uses the same layout; its records also carry
// "extractor", which is ignored on load.

#ifndef KPE_HARNESS_HPP_
#define KPE_HARNESS_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kpe/corpus.hpp"
#include "kpe/embed.hpp"
#include "kpe/metrics.hpp"
#include "kpe/textproc.hpp"

namespace kpe {

struct PredictionSet {
  std::string model_id;
  std::string train_domain;
  std::string test_domain;
  std::map<std::string, std::vector<std::string>> predictions;  // by doc id
};

// Validates against `corpus`: every id must exist (kUnknownDocument) and
// every test-split document must be covered (kMissingDocument). Malformed
// lines and repeated ids raise kMalformedRecord with the line number.
PredictionSet load_predictions(const std::filesystem::path& path,
                               const Corpus& corpus);
PredictionSet parse_predictions(std::string_view contents, const Corpus& corpus,
                                const std::string& source = "<memory>");

// Reads only the header line.
PredictionSet read_prediction_header(const std::filesystem::path& path);

// Header plus one record per document in id order. `extractor`, when set,
// is written into every record.
std::string serialize_predictions(const PredictionSet& set,
                                  std::optional<std::string_view> extractor = {});

enum class RougeVariant { kF, kRecall, kPrecision };

struct EvalOptions {
  TopKConfig topk;
  RougeVariant rouge = RougeVariant::kF;
  std::size_t jobs = 1;
};

inline constexpr std::string_view kFullCutoff = "full";

struct EvalRow {
  std::string model_id;
  std::string train_domain;
  std::string test_domain;
  std::string cutoff;  // "5", "10", ... or "full"
  std::string metric;  // "BS", "R1", "F1"
  double value = 0.0;  // in [0, 1]
};

struct GeneratedStats {
  MeanStd count;              // predicted phrases per document
  double abstractness = 0.0;  // mean per-document abstractness
};

// Per-document scores for one cutoff label.
struct DocumentScores {
  std::string id;
  std::string cutoff;
  MetricScore rouge1;
  MetricScore fullmatch;
  std::optional<MetricScore> bertscore;
};

struct EvalReport {
  std::string model_id;
  std::string train_domain;
  std::string test_domain;
  std::vector<EvalRow> rows;
  std::optional<GeneratedStats> generated;
  std::vector<DocumentScores> per_document;
};

// Scores the test-split documents of `corpus`. Predictions are cut at each
// cutoff (and also left whole when topk.untruncated); references are never
// cut. BertScore rows appear only when a provider is given. Rows are
// ordered metric-major (BS, R1, F1), then by cutoff.
EvalReport evaluate(const PredictionSet& predictions, const Corpus& corpus,
                    const Normalizer& n, const EmbeddingProvider* provider,
                    const EvalOptions& options = {});

// One report per prediction set, ordered by (train_domain, test_domain,
// model_id). Throws kMissingCorpus when a test domain has no corpus.
std::vector<EvalReport> cross_matrix(std::span<const PredictionSet> sets,
                                     const std::map<std::string, Corpus>& corpora,
                                     const Normalizer& n,
                                     const EmbeddingProvider* provider,
                                     const EvalOptions& options = {});

enum class ReportFormat { kCsv, kJson, kMarkdown };
std::optional<ReportFormat> parse_report_format(std::string_view name);
std::string_view report_extension(ReportFormat format);

// Deterministic serialization. Percentages use two decimals in csv and
// markdown; json carries raw values. Throws kInvalidArgument when there is
// nothing to render.
std::string render_report(std::span<const EvalReport> reports,
                          ReportFormat format);
void write_report(std::span<const EvalReport> reports, ReportFormat format,
                  const std::filesystem::path& out_path);

// 0.7595 -> "75.95".
std::string format_percent(double value);

enum class FinetuneFormat { kCausal, kSeq2Seq };
std::optional<FinetuneFormat> parse_finetune_format(std::string_view name);

inline constexpr std::string_view kKeyphrasesMarker = "<|keyphrases|>";
inline constexpr std::string_view kEndMarker = "<|end|>";

// Causal lines: train documents become "{text}<|keyphrases|>{k1, k2}<|end|>",
// test documents the prompt "{text}<|keyphrases|>". Seq2seq lines are
// {"input": text, "target": "k1, k2"}. Keyphrases containing ", " cannot be
// recovered from the joined string and trigger a warning.
std::string render_finetune(const Corpus& corpus, FinetuneFormat format,
                            Split split);
void export_finetune(const Corpus& corpus, FinetuneFormat format, Split split,
                     const std::filesystem::path& out_path);

struct CausalRecord {
  std::string text;
  std::vector<std::string> keyphrases;
  bool has_end = false;  // false for generation prompts
};

// Inverse of one causal line. Throws kMalformedRecord.
CausalRecord parse_causal_line(std::string_view line);

}  // namespace kpe

#endif  // KPE_HARNESS_HPP_
