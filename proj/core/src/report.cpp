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

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include <fmt/format.h>

#include "json.hpp"
#include "kpe/error.hpp"
#include "kpe/harness.hpp"
#include "kpe/io.hpp"

namespace kpe {
namespace {

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string md_cell(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string format_fixed2(double value) { return fmt::format("{:.2f}", value); }

std::string row_label(const EvalRow& row) {
  return row.metric + "@" + row.cutoff;
}

struct StatRow {
  std::string metric;
  double value;
  std::string text;
};

std::vector<StatRow> stat_rows(const GeneratedStats& g) {
  return {{"avg_generated", g.count.mean, format_fixed2(g.count.mean)},
          {"avg_generated_std", g.count.std, format_fixed2(g.count.std)},
          {"abstractness", g.abstractness, format_percent(g.abstractness)}};
}

std::string render_csv(std::span<const EvalReport> reports) {
  std::string out = "model_id,train_domain,test_domain,cutoff,metric,value\n";
  const auto line = [&](const EvalReport& r, std::string_view cutoff,
                        std::string_view metric, const std::string& value) {
    out += fmt::format("{},{},{},{},{},{}\n", csv_field(r.model_id),
                       csv_field(r.train_domain), csv_field(r.test_domain),
                       csv_field(cutoff), csv_field(metric), value);
  };
  for (const EvalReport& r : reports) {
    for (const EvalRow& row : r.rows) {
      line(r, row.cutoff, row.metric, format_percent(row.value));
    }
    if (r.generated) {
      for (const StatRow& s : stat_rows(*r.generated)) {
        line(r, kFullCutoff, s.metric, s.text);
      }
    }
  }
  return out;
}

std::string render_json(std::span<const EvalReport> reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  const auto push = [&](const EvalReport& r, std::string_view cutoff,
                        std::string_view metric, double value) {
    nlohmann::ordered_json o;
    o["model_id"] = r.model_id;
    o["train_domain"] = r.train_domain;
    o["test_domain"] = r.test_domain;
    o["cutoff"] = std::string(cutoff);
    o["metric"] = std::string(metric);
    o["value"] = value;
    arr.push_back(std::move(o));
  };
  for (const EvalReport& r : reports) {
    for (const EvalRow& row : r.rows) push(r, row.cutoff, row.metric, row.value);
    if (r.generated) {
      for (const StatRow& s : stat_rows(*r.generated)) {
        push(r, kFullCutoff, s.metric, s.value);
      }
    }
  }
  return arr.dump(2) + "\n";
}

// One row per metric@cutoff, one column per report.
std::string render_markdown(std::span<const EvalReport> reports) {
  std::vector<std::string> labels;
  for (const EvalReport& r : reports) {
    for (const EvalRow& row : r.rows) {
      const std::string label = row_label(row);
      if (std::find(labels.begin(), labels.end(), label) == labels.end()) {
        labels.push_back(label);
      }
    }
  }
  std::string out = "| Metric |";
  std::string rule = "|---|";
  for (const EvalReport& r : reports) {
    out += " " + md_cell(fmt::format("{} ({}→{})", r.model_id,
                                     r.train_domain, r.test_domain)) + " |";
    rule += "---:|";
  }
  out += "\n" + rule + "\n";
  for (const std::string& label : labels) {
    out += "| " + md_cell(label) + " |";
    for (const EvalReport& r : reports) {
      auto it = std::find_if(r.rows.begin(), r.rows.end(), [&](const EvalRow& row) {
        return row_label(row) == label;
      });
      out += " " + (it == r.rows.end() ? std::string("-") : format_percent(it->value)) + " |";
    }
    out += "\n";
  }
  const bool any_generated = std::any_of(reports.begin(), reports.end(),
                                         [](const EvalReport& r) { return r.generated.has_value(); });
  if (any_generated) {
    out += "| Avg generated |";
    for (const EvalReport& r : reports) {
      out += " " + (r.generated ? format_fixed2(r.generated->count.mean) + " ± " +
                                      format_fixed2(r.generated->count.std)
                                : std::string("-")) + " |";
    }
    out += "\n| Abstractness |";
    for (const EvalReport& r : reports) {
      out += " " + (r.generated ? format_percent(r.generated->abstractness)
                                : std::string("-")) + " |";
    }
    out += "\n";
  }
  return out;
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  if (name == "markdown" || name == "md") return ReportFormat::kMarkdown;
  return std::nullopt;
}

std::string_view report_extension(ReportFormat format) {
  switch (format) {
    case ReportFormat::kCsv: return ".csv";
    case ReportFormat::kJson: return ".json";
    case ReportFormat::kMarkdown: return ".md";
  }
  return "";
}

std::string format_percent(double value) {
  const long long hundredths = std::llround(value * 10000.0);
  const long long mag = std::llabs(hundredths);
  return fmt::format("{}{}.{:02}", hundredths < 0 ? "-" : "", mag / 100, mag % 100);
}

std::string render_report(std::span<const EvalReport> reports,
                          ReportFormat format) {
  if (reports.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no evaluation reports to render");
  }
  switch (format) {
    case ReportFormat::kCsv: return render_csv(reports);
    case ReportFormat::kJson: return render_json(reports);
    case ReportFormat::kMarkdown: return render_markdown(reports);
  }
  return {};
}

void write_report(std::span<const EvalReport> reports, ReportFormat format,
                  const std::filesystem::path& out_path) {
  write_file_atomic(out_path, render_report(reports, format));
}

}  // namespace kpe
