// Copyright 2026 The unrepro Authors. All Rights Reserved.
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

#include "unrepro/report.h"

#include <cstdio>
#include <json.hpp>

#include "unrepro/logparse.h"

namespace unrepro {
namespace {

using nlohmann::ordered_json;

std::string RuleName(const RuleSet& rules, int id) {
  const CompiledRule* r = rules.find(id);
  return r ? r->rule().name : std::to_string(id);
}

double Rounded(double v) { return std::stod(format_score(v)); }

const char* kMetricNames[] = {"A@1", "A@5", "A@10", "P@1", "P@5",
                              "P@10", "R@1", "R@5", "R@10"};

std::array<double, 9> Flatten(const PackageMetrics& m) {
  return {m.accuracy[0],  m.accuracy[1],  m.accuracy[2],
          m.precision[0], m.precision[1], m.precision[2],
          m.recall[0],    m.recall[1],    m.recall[2]};
}

void AppendRow(std::string& out, std::string_view variant, std::string_view package,
               const PackageMetrics& m) {
  out += variant;
  out += '\t';
  out += package;
  for (double v : Flatten(m)) {
    out += '\t';
    out += format_score(v);
  }
  out += '\t';
  out += format_score(m.average_precision);
  out += '\n';
}

ordered_json MetricsJson(const PackageMetrics& m, const char* ap_name) {
  ordered_json j;
  std::array<double, 9> flat = Flatten(m);
  for (std::size_t i = 0; i < flat.size(); ++i)
    j[kMetricNames[i]] = flat[i];
  j[ap_name] = m.average_precision;
  return j;
}

}  // namespace

std::string format_score(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", value);
  return buf;
}

std::string render_ranked_tsv(const RankedList& list, const RuleSet& rules,
                              std::size_t top) {
  std::string out = "rank\tscore\thf\tpath\tevidence\n";
  for (std::size_t i = 0; i < list.entries.size() && i < top; ++i) {
    const RankedEntry& e = list.entries[i];
    out += std::to_string(i + 1) + '\t' + format_score(e.score) + '\t' +
           (e.hf_matched ? "1" : "0") + '\t' + e.path + '\t';
    if (e.evidence.empty())
      out += '-';
    for (std::size_t k = 0; k < e.evidence.size(); ++k) {
      if (k)
        out += ',';
      out += RuleName(rules, e.evidence[k].rule_id) + ':' +
             std::to_string(e.evidence[k].line);
    }
    out += '\n';
  }
  return out;
}

std::string render_ranked_json(const RankedList& list, const RuleSet& rules,
                               std::size_t top, const Corpus* corpus) {
  ordered_json doc;
  doc["variant"] = std::string(to_string(list.variant));
  doc["alpha"] = list.alpha;
  ordered_json entries = ordered_json::array();
  for (std::size_t i = 0; i < list.entries.size() && i < top; ++i) {
    const RankedEntry& e = list.entries[i];
    std::vector<std::string_view> lines;
    if (corpus && !e.evidence.empty()) {
      for (const SourceFile& f : corpus->files())
        if (f.path == e.path)
          lines = split_lines(f.bytes);
    }
    ordered_json evidence = ordered_json::array();
    for (const LineHit& h : e.evidence) {
      ordered_json item{{"rule", RuleName(rules, h.rule_id)},
                        {"rule_id", h.rule_id},
                        {"line", h.line}};
      if (h.line >= 1 && h.line <= lines.size())
        item["text"] = std::string(lines[h.line - 1]);
      evidence.push_back(std::move(item));
    }
    entries.push_back({{"rank", i + 1},
                       {"path", e.path},
                       {"score", Rounded(e.score)},
                       {"hf_matched", e.hf_matched},
                       {"similarity", Rounded(e.similarity)},
                       {"evidence", std::move(evidence)}});
  }
  doc["entries"] = std::move(entries);
  doc["warnings"] = list.warnings;
  return doc.dump(2) + "\n";
}

std::string render_eval_tsv(std::span<const EvalReport> reports) {
  std::string out = "variant\tpackage";
  for (const char* name : kMetricNames)
    out += std::string("\t") + name;
  out += "\tAP\n";
  for (const EvalReport& r : reports) {
    const std::string variant(to_string(r.variant));
    for (const auto& [id, m] : r.per_package)
      AppendRow(out, variant, id, m);
    AppendRow(out, variant, "MEAN", r.aggregate);
  }
  return out;
}

std::string render_eval_json(std::span<const EvalReport> reports) {
  ordered_json doc;
  ordered_json variants = ordered_json::array();
  for (const EvalReport& r : reports) {
    ordered_json packages = ordered_json::object();
    for (const auto& [id, m] : r.per_package)
      packages[id] = MetricsJson(m, "AP");
    variants.push_back({{"variant", std::string(to_string(r.variant))},
                        {"alpha", r.alpha},
                        {"n_packages", r.n_packages},
                        {"aggregate", MetricsJson(r.aggregate, "MAP")},
                        {"packages", std::move(packages)}});
  }
  doc["variants"] = std::move(variants);
  doc["errors"] = reports.empty() ? ordered_json::object()
                                  : ordered_json(reports.front().errors);
  return doc.dump(2) + "\n";
}

std::string render_sweep_tsv(std::span<const SweepRow> rows) {
  std::string out = "alpha\tA@10\tP@10\tR@10\tMAP\n";
  for (const SweepRow& r : rows) {
    char alpha[16];
    std::snprintf(alpha, sizeof alpha, "%.2f", r.alpha);
    out += std::string(alpha) + '\t' + format_score(r.accuracy_at_10) + '\t' +
           format_score(r.precision_at_10) + '\t' + format_score(r.recall_at_10) +
           '\t' + format_score(r.mean_average_precision) + '\n';
  }
  return out;
}

std::string render_rules_table(const RuleSet& rules) {
  std::string out = "id\tname\tpattern\tdescription\n";
  for (const CompiledRule& r : rules.rules())
    out += std::to_string(r.rule().id) + '\t' + r.rule().name + '\t' +
           r.rule().pattern + '\t' + r.rule().description + '\n';
  return out;
}

std::string render_rule_hits(std::string_view path, std::string_view text,
                             const RuleSet& rules) {
  std::vector<std::string_view> lines = split_lines(text);
  std::string out;
  for (const LineHit& h : scan_text(text, rules)) {
    out += path;
    out += ':' + std::to_string(h.line) + ':' + RuleName(rules, h.rule_id) + ':';
    out += lines[h.line - 1];
    out += '\n';
  }
  return out;
}

}  // namespace unrepro
