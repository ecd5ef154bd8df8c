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

#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "kpe/corpus.hpp"
#include "kpe/embed.hpp"
#include "kpe/error.hpp"
#include "kpe/extract.hpp"
#include "kpe/harness.hpp"
#include "kpe/io.hpp"
#include "kpe/log.hpp"
#include "kpe/metrics.hpp"
#include "kpe/normalizer.hpp"
#include "kpe/parallel.hpp"
#include "kpe/stopwords.hpp"

namespace kpe::cli {
namespace {

namespace fs = std::filesystem;

struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, std::string message) {
  throw Failure{code, std::move(message)};
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo:
      return kExitIo;
    case ErrorCode::kTransport:
    case ErrorCode::kProtocol:
    case ErrorCode::kMissingEmbedding:
    case ErrorCode::kMalformedCache:
    case ErrorCode::kDimensionMismatch:
    case ErrorCode::kZeroVector:
      return kExitProvider;
    case ErrorCode::kMissingDocument:
      return kExitCoverage;
    case ErrorCode::kInvalidArgument:
      return kExitUsage;
    default:
      return kExitData;
  }
}

struct Common {
  std::vector<std::string> corpora;  // domain=path
  std::string normalizer = "stemmer";
  std::string lemmas;
  std::string stopwords;
  std::string lang = "ru";
  std::string provider;
  std::string out;
  std::uint64_t seed = 42;
  std::size_t jobs = 0;
};

void add_common(CLI::App& cmd, Common& c, bool with_provider) {
  cmd.add_option("--corpus", c.corpora, "Corpus as <domain>=<path> (repeatable)")
      ->required();
  cmd.add_option("--normalizer", c.normalizer, "stemmer, lowercase or external")
      ->check(CLI::IsMember({"stemmer", "lowercase", "external"}))
      ->capture_default_str();
  cmd.add_option("--lemmas", c.lemmas, "surface<TAB>lemma file for --normalizer external");
  cmd.add_option("--stopwords", c.stopwords, "Stopword list overriding the bundled one");
  cmd.add_option("--lang", c.lang, "Bundled stopword language")
      ->check(CLI::IsMember({"ru", "en"}))
      ->capture_default_str();
  if (with_provider) {
    cmd.add_option("--provider", c.provider,
                   "Embeddings: hash[:dim], cache:<path> or remote:<url>");
  }
  cmd.add_option("--out", c.out, "Output directory");
  cmd.add_option("--seed", c.seed, "Seed for the hash embedding provider")
      ->capture_default_str();
  cmd.add_option("--jobs", c.jobs, "Worker threads (0 = logical cores)")
      ->capture_default_str();
}

struct Context {
  std::map<std::string, Corpus> corpora;
  std::shared_ptr<const Normalizer> normalizer;
  std::optional<StopwordList> stopwords;
  Lang lang = Lang::kRu;
  std::shared_ptr<const EmbeddingProvider> provider;

  CandidateOptions candidate_options(std::size_t max_len) const {
    CandidateOptions o;
    o.max_len = max_len;
    o.lang = lang;
    o.stopwords = stopwords ? &*stopwords : nullptr;
    return o;
  }
};

Context build_context(const Common& c) {
  Context ctx;
  for (const std::string& spec : c.corpora) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
      fail(kExitUsage, "--corpus expects <domain>=<path>, got '" + spec + "'");
    }
    const std::string domain = spec.substr(0, eq);
    if (ctx.corpora.contains(domain)) {
      fail(kExitUsage, "domain '" + domain + "' given twice");
    }
    try {
      ctx.corpora.emplace(domain, load_corpus(spec.substr(eq + 1)));
    } catch (const Error& e) {
      fail(kExitData, e.what());
    }
  }

  if (c.normalizer == "stemmer") {
    ctx.normalizer = std::make_shared<RussianStemmer>();
  } else if (c.normalizer == "lowercase") {
    ctx.normalizer = std::make_shared<LowercaseNormalizer>();
  } else {
    if (c.lemmas.empty()) fail(kExitUsage, "--normalizer external requires --lemmas");
    try {
      ctx.normalizer = std::make_shared<DictionaryNormalizer>(
          DictionaryNormalizer::from_file(c.lemmas));
    } catch (const Error& e) {
      fail(kExitData, e.what());
    }
  }

  ctx.lang = c.lang == "en" ? Lang::kEn : Lang::kRu;
  if (!c.stopwords.empty()) {
    try {
      ctx.stopwords = StopwordList::from_file(c.stopwords);
    } catch (const Error& e) {
      fail(kExitData, e.what());
    }
  }

  if (!c.provider.empty() && c.provider != "none") {
    try {
      ctx.provider = make_provider(c.provider, c.seed);
    } catch (const Error& e) {
      fail(e.code() == ErrorCode::kInvalidArgument ? kExitUsage : kExitProvider,
           e.what());
    }
  }
  return ctx;
}

std::string safe_component(std::string_view s) {
  std::string out;
  for (char ch : s) {
    const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
                    (ch >= '0' && ch <= '9') || ch == '-' || ch == '_' || ch == '.';
    out += ok ? ch : '_';
  }
  return out;
}

fs::path out_dir(const Common& c) {
  fs::path dir = c.out.empty() ? fs::path(".") : fs::path(c.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) fail(kExitIo, "cannot create output directory " + dir.string() + ": " + ec.message());
  return dir;
}

const Corpus& corpus_for(const Context& ctx, const std::string& domain) {
  auto it = ctx.corpora.find(domain);
  if (it == ctx.corpora.end()) {
    fail(kExitData, "no corpus given for domain '" + domain + "'");
  }
  return it->second;
}

PredictionSet load_prediction_file(const fs::path& path, const Context& ctx) {
  PredictionSet header;
  try {
    header = read_prediction_header(path);
  } catch (const Error& e) {
    fail(kExitData, e.what());
  }
  const Corpus& corpus = corpus_for(ctx, header.test_domain);
  try {
    return load_predictions(path, corpus);
  } catch (const Error& e) {
    fail(e.code() == ErrorCode::kMissingDocument ? kExitCoverage : kExitData, e.what());
  }
}

// ---------------------------------------------------------------- stats

int cmd_stats(const Common& c, std::ostream& out) {
  const Context ctx = build_context(c);
  std::vector<std::pair<std::string, CorpusStats>> stats;
  for (const auto& [domain, corpus] : ctx.corpora) {
    stats.emplace_back(domain, corpus_stats(corpus, *ctx.normalizer, c.jobs));
  }
  const auto ms = [](const MeanStd& m) {
    return fmt::format("{:.2f} ± {:.2f}", m.mean, m.std);
  };
  std::string table = "| Characteristic |";
  std::string rule = "|---|";
  for (const auto& [domain, _] : stats) {
    table += " " + domain + " |";
    rule += "---:|";
  }
  table += "\n" + rule + "\n";
  const auto row = [&](std::string_view label, auto&& cell) {
    table += fmt::format("| {} |", label);
    for (const auto& [_, s] : stats) table += " " + cell(s) + " |";
    table += "\n";
  };
  row("Train size", [](const CorpusStats& s) { return std::to_string(s.train_size); });
  row("Test size", [](const CorpusStats& s) { return std::to_string(s.test_size); });
  row("Sentences per text", [&](const CorpusStats& s) { return ms(s.sentences); });
  row("Tokens per text", [&](const CorpusStats& s) { return ms(s.tokens); });
  row("Keyphrases per text", [&](const CorpusStats& s) { return ms(s.keyphrases); });
  row("Absent keyphrases, %",
      [](const CorpusStats& s) { return fmt::format("{:.2f}", s.absent_pct); });
  out << table;
  if (!c.out.empty()) write_file_atomic(out_dir(c) / "stats.md", table);
  return kExitOk;
}

// -------------------------------------------------------------- extract

struct ExtractArgs {
  std::string extractor;
  std::size_t k = 10;
  std::string split = "test";
  std::string domain;
  std::size_t max_len = 3;
  double diversity = 0.0;
};

int cmd_extract(const Common& c, const ExtractArgs& a, std::ostream& out) {
  const ExtractorKind kind = *parse_extractor(a.extractor);
  if (kind == ExtractorKind::kEmbedRank && (c.provider.empty() || c.provider == "none")) {
    fail(kExitUsage, "embedrank needs an embedding provider (--provider)");
  }
  const Context ctx = build_context(c);
  std::string domain = a.domain;
  if (domain.empty()) {
    if (ctx.corpora.size() != 1) fail(kExitUsage, "several corpora given; pick one with --domain");
    domain = ctx.corpora.begin()->first;
  }
  const Corpus& corpus = corpus_for(ctx, domain);
  const Split split = *parse_split(a.split);
  const std::vector<const Document*> docs = corpus.split(split);
  if (docs.empty()) {
    fail(kExitData, fmt::format("corpus '{}' has no {} documents", domain, a.split));
  }

  const CandidateOptions cand = ctx.candidate_options(a.max_len);
  std::vector<std::vector<std::string>> results(docs.size());
  parallel_for(docs.size(), c.jobs, [&](std::size_t i) {
    const Document& doc = *docs[i];
    ExtractionResult r;
    switch (kind) {
      case ExtractorKind::kTermFreq:
        r = extract_termfreq(doc, a.k, *ctx.normalizer, TermFreqOptions{cand});
        break;
      case ExtractorKind::kYake: {
        YakeOptions o;
        o.candidates = cand;
        r = extract_yake(doc, a.k, *ctx.normalizer, o);
        break;
      }
      case ExtractorKind::kEmbedRank:
        r = extract_embedrank(doc, a.k, *ctx.provider, *ctx.normalizer,
                              EmbedRankOptions{cand, a.diversity});
        break;
    }
    results[i] = r.surfaces();
  });

  PredictionSet set;
  set.model_id = std::string(extractor_name(kind));
  set.train_domain = domain;
  set.test_domain = domain;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    set.predictions.emplace(docs[i]->id, std::move(results[i]));
  }
  const fs::path path = out_dir(c) / fmt::format("{}_{}_{}.jsonl", set.model_id,
                                                 safe_component(domain), a.split);
  write_file_atomic(path, serialize_predictions(set, extractor_name(kind)));
  out << path.string() << "\n";
  return kExitOk;
}

// ------------------------------------------------------------ eval/matrix

struct EvalArgs {
  std::string predictions;
  std::string topk = "5,10,15";
  bool no_full = false;
  std::string rouge = "f";
  std::string format = "markdown";
};

EvalOptions eval_options(const Common& c, const EvalArgs& a) {
  EvalOptions o;
  try {
    o.topk.cutoffs = parse_cutoffs(a.topk);
  } catch (const Error& e) {
    fail(kExitUsage, e.what());
  }
  o.topk.untruncated = !a.no_full;
  if (o.topk.cutoffs.empty() && !o.topk.untruncated) {
    fail(kExitUsage, "nothing to evaluate: no cutoffs and --no-full");
  }
  o.rouge = a.rouge == "recall"      ? RougeVariant::kRecall
            : a.rouge == "precision" ? RougeVariant::kPrecision
                                     : RougeVariant::kF;
  o.jobs = c.jobs;
  return o;
}

void emit_report(const Common& c, std::span<const EvalReport> reports,
                 ReportFormat format, const std::string& stem, std::ostream& out) {
  if (c.out.empty()) {
    out << render_report(reports, format);
    return;
  }
  const fs::path path = out_dir(c) / (stem + std::string(report_extension(format)));
  write_report(reports, format, path);
  out << path.string() << "\n";
}

int cmd_eval(const Common& c, const EvalArgs& a, std::ostream& out) {
  const EvalOptions options = eval_options(c, a);
  const ReportFormat format = *parse_report_format(a.format);
  const Context ctx = build_context(c);
  const PredictionSet set = load_prediction_file(a.predictions, ctx);
  const EvalReport report = evaluate(set, corpus_for(ctx, set.test_domain),
                                     *ctx.normalizer, ctx.provider.get(), options);
  emit_report(c, std::span(&report, 1), format,
              fmt::format("eval_{}_{}_{}", safe_component(set.model_id),
                          safe_component(set.train_domain),
                          safe_component(set.test_domain)),
              out);
  return kExitOk;
}

int cmd_matrix(const Common& c, const EvalArgs& a, std::ostream& out) {
  const EvalOptions options = eval_options(c, a);
  const ReportFormat format = *parse_report_format(a.format);
  std::vector<fs::path> files;
  std::error_code ec;
  for (fs::directory_iterator it(a.predictions, ec), end; !ec && it != end;
       it.increment(ec)) {
    if (it->is_regular_file() && it->path().extension() == ".jsonl") {
      files.push_back(it->path());
    }
  }
  if (ec) fail(kExitUsage, "cannot read directory " + a.predictions + ": " + ec.message());
  if (files.empty()) fail(kExitUsage, "no .jsonl prediction files in " + a.predictions);
  std::sort(files.begin(), files.end());

  const Context ctx = build_context(c);
  std::vector<PredictionSet> sets;
  for (const fs::path& f : files) sets.push_back(load_prediction_file(f, ctx));
  const std::vector<EvalReport> reports =
      cross_matrix(sets, ctx.corpora, *ctx.normalizer, ctx.provider.get(), options);
  emit_report(c, reports, format, "matrix", out);
  return kExitOk;
}

// --------------------------------------------------------------- export

struct ExportArgs {
  std::string format = "causal";
  std::string split = "both";
};

int cmd_export(const Common& c, const ExportArgs& a, std::ostream& out) {
  const FinetuneFormat format = *parse_finetune_format(a.format);
  const Context ctx = build_context(c);
  std::vector<Split> splits;
  if (a.split != "test") splits.push_back(Split::kTrain);
  if (a.split != "train") splits.push_back(Split::kTest);
  const fs::path dir = out_dir(c);
  const std::string_view suffix =
      format == FinetuneFormat::kCausal ? ".causal.txt" : ".seq2seq.jsonl";
  for (const auto& [domain, corpus] : ctx.corpora) {
    for (Split s : splits) {
      const fs::path path = dir / fmt::format("{}_{}{}", safe_component(domain),
                                              split_name(s), suffix);
      export_finetune(corpus, format, s, path);
      out << path.string() << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Keyphrase extraction and evaluation toolkit", "kpe"};
  app.require_subcommand(1);
  app.set_config("--config", "", "INI/TOML file with option defaults; flags win");

  Common common;
  ExtractArgs extract_args;
  EvalArgs eval_args;
  ExportArgs export_args;

  CLI::App* stats = app.add_subcommand("stats", "Print corpus statistics");
  add_common(*stats, common, false);

  CLI::App* extract = app.add_subcommand("extract", "Run an unsupervised extractor");
  add_common(*extract, common, true);
  extract->add_option("--extractor", extract_args.extractor, "termfreq, yake or embedrank")
      ->required()
      ->check(CLI::IsMember({"termfreq", "yake", "embedrank"}));
  extract->add_option("-k", extract_args.k, "Keyphrases per document")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  extract->add_option("--split", extract_args.split, "train or test")
      ->check(CLI::IsMember({"train", "test"}))
      ->capture_default_str();
  extract->add_option("--domain", extract_args.domain, "Corpus to extract from");
  extract->add_option("--max-len", extract_args.max_len, "Longest candidate in words")
      ->check(CLI::Range(1, 4))
      ->capture_default_str();
  extract->add_option("--diversity", extract_args.diversity, "MMR diversity for embedrank")
      ->check(CLI::Range(0.0, 0.999999))
      ->capture_default_str();

  const auto add_eval_flags = [&](CLI::App& cmd, const char* what) {
    add_common(cmd, common, true);
    cmd.add_option("predictions", eval_args.predictions, what)->required();
    cmd.add_option("--topk", eval_args.topk, "Comma-separated cutoffs")
        ->capture_default_str();
    cmd.add_flag("--no-full", eval_args.no_full, "Skip the untruncated evaluation");
    cmd.add_option("--rouge", eval_args.rouge, "ROUGE-1 value to report")
        ->check(CLI::IsMember({"f", "recall", "precision"}))
        ->capture_default_str();
    cmd.add_option("--format", eval_args.format, "csv, json or markdown")
        ->check(CLI::IsMember({"csv", "json", "markdown"}))
        ->capture_default_str();
  };
  CLI::App* eval = app.add_subcommand("eval", "Evaluate one prediction file");
  add_eval_flags(*eval, "Prediction file");
  CLI::App* matrix = app.add_subcommand("matrix", "Evaluate a directory of prediction files");
  add_eval_flags(*matrix, "Directory of .jsonl prediction files");

  CLI::App* exp = app.add_subcommand("export", "Write fine-tuning files");
  add_common(*exp, common, false);
  exp->add_option("--format", export_args.format, "causal or seq2seq")
      ->check(CLI::IsMember({"causal", "seq2seq"}))
      ->capture_default_str();
  exp->add_option("--split", export_args.split, "train, test or both")
      ->check(CLI::IsMember({"train", "test", "both"}))
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  WarningSink previous = set_warning_sink(
      [&err](std::string_view msg) { err << "warning: " << msg << "\n"; });
  int code = kExitOk;
  try {
    if (stats->parsed()) code = cmd_stats(common, out);
    if (extract->parsed()) code = cmd_extract(common, extract_args, out);
    if (eval->parsed()) code = cmd_eval(common, eval_args, out);
    if (matrix->parsed()) code = cmd_matrix(common, eval_args, out);
    if (exp->parsed()) code = cmd_export(common, export_args, out);
  } catch (const Failure& f) {
    err << "kpe: error: " << f.message << "\n";
    code = f.code;
  } catch (const Error& e) {
    err << "kpe: error: " << e.what() << "\n";
    code = exit_code_for(e.code());
  }
  set_warning_sink(std::move(previous));
  return code;
}

}  // namespace kpe::cli
