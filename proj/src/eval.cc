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

#include "unrepro/eval.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "unrepro/errors.h"

namespace unrepro {
namespace {

std::string ReadText(const std::filesystem::path& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError(std::string("cannot read ") + what + " " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void CheckAlpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::domain_error("alpha must lie in [0, 1]");
}

}  // namespace

PreparedDataset prepare_dataset(const Manifest& manifest, const PipelineConfig& config) {
  PreparedDataset out;
  std::vector<const ManifestEntry*> entries;
  for (const ManifestEntry& e : manifest.entries)
    entries.push_back(&e);
  std::sort(entries.begin(), entries.end(),
            [](const ManifestEntry* a, const ManifestEntry* b) { return a->id < b->id; });

  for (const ManifestEntry* e : entries) {
    try {
      if (e->truth.empty())
        throw InputError("no ground-truth files");
      std::string diff = ReadText(e->diff_log, "diff log");
      std::string build = ReadText(e->build_log, "build log");
      Corpus corpus = ingest_tree(e->source_dir, config.ingest);
      PreparedPackage p{e->id, e->truth,
                        gather_evidence(corpus, diff, build, config.localize, config.rules)};
      for (const std::string& w : corpus.warnings())
        out.warnings.push_back(e->id + ": " + w);
      for (const std::string& w : p.evidence.warnings)
        out.warnings.push_back(e->id + ": " + w);
      out.packages.push_back(std::move(p));
    } catch (const InputError& err) {
      out.errors[e->id] = err.what();
      out.warnings.push_back(e->id + ": excluded from the evaluation: " + err.what());
    }
  }
  return out;
}

EvalReport evaluate_prepared(const PreparedDataset& dataset, Variant variant,
                             double alpha) {
  CheckAlpha(alpha);
  EvalReport report;
  report.variant = variant;
  report.alpha = effective_alpha(variant, alpha);
  report.errors = dataset.errors;
  report.warnings = dataset.warnings;
  std::vector<PackageMetrics> rows;
  for (const PreparedPackage& p : dataset.packages) {
    RankedList ranked = fuse(p.evidence, variant, alpha);
    std::vector<std::string> paths;
    paths.reserve(ranked.entries.size());
    for (const RankedEntry& e : ranked.entries)
      paths.push_back(e.path);
    PackageMetrics m = compute_metrics(paths, p.truth);
    report.per_package.emplace(p.id, m);
    rows.push_back(m);
  }
  report.n_packages = rows.size();
  report.aggregate = mean_metrics(rows);
  return report;
}

EvalReport evaluate_dataset(const Manifest& manifest, const PipelineConfig& config) {
  CheckAlpha(config.localize.alpha);
  return evaluate_prepared(prepare_dataset(manifest, config), config.localize.variant,
                           config.localize.alpha);
}

std::vector<EvalReport> evaluate_variants(const Manifest& manifest,
                                          const PipelineConfig& config,
                                          std::span<const Variant> variants) {
  CheckAlpha(config.localize.alpha);
  PreparedDataset dataset = prepare_dataset(manifest, config);
  std::vector<EvalReport> out;
  for (Variant v : variants)
    out.push_back(evaluate_prepared(dataset, v, config.localize.alpha));
  return out;
}

std::vector<double> default_alpha_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 9; ++i)
    grid.push_back(i / 10.0);
  return grid;
}

std::vector<SweepRow> alpha_sweep(const PreparedDataset& dataset,
                                  std::span<const double> alphas) {
  for (double a : alphas)
    CheckAlpha(a);
  std::vector<SweepRow> rows;
  for (double a : alphas) {
    EvalReport r = evaluate_prepared(dataset, Variant::kFull, a);
    constexpr std::size_t at10 = 2;
    static_assert(kCutoffs[at10] == 10);
    rows.push_back({a, r.aggregate.accuracy[at10], r.aggregate.precision[at10],
                    r.aggregate.recall[at10], r.aggregate.average_precision});
  }
  return rows;
}

std::vector<SweepRow> alpha_sweep(const Manifest& manifest,
                                  std::span<const double> alphas,
                                  const PipelineConfig& config) {
  for (double a : alphas)
    CheckAlpha(a);
  return alpha_sweep(prepare_dataset(manifest, config), alphas);
}

}  // namespace unrepro
