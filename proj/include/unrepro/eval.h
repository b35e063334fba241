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

#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "unrepro/corpus.h"
#include "unrepro/manifest.h"
#include "unrepro/metrics.h"
#include "unrepro/ranker.h"
#include "unrepro/rules.h"

namespace unrepro {

struct PipelineConfig {
  LocalizeOptions localize;
  IngestOptions ingest;
  RuleSet rules = RuleSet::builtin();
};

/// Metrics of one variant over a dataset. Packages that failed to load or
/// localize are listed in `errors` and left out of every aggregate.
struct EvalReport {
  Variant variant = Variant::kFull;
  double alpha = kDefaultAlpha;
  std::map<std::string, PackageMetrics> per_package;
  PackageMetrics aggregate;  // means over per_package
  std::size_t n_packages = 0;
  std::map<std::string, std::string> errors;
  std::vector<std::string> warnings;
};

struct PreparedPackage {
  std::string id;
  TruthSet truth;
  LocalizationEvidence evidence;
};

/// Per-package evidence, computed once and shared by every variant and
/// alpha evaluated on it.
struct PreparedDataset {
  std::vector<PreparedPackage> packages;  // by id
  std::map<std::string, std::string> errors;
  std::vector<std::string> warnings;
};

PreparedDataset prepare_dataset(const Manifest& manifest, const PipelineConfig& config);

EvalReport evaluate_prepared(const PreparedDataset& dataset, Variant variant,
                             double alpha);

/// Evaluates config.localize.variant at config.localize.alpha.
EvalReport evaluate_dataset(const Manifest& manifest, const PipelineConfig& config);

/// One report per requested variant, sharing the per-package work.
std::vector<EvalReport> evaluate_variants(const Manifest& manifest,
                                          const PipelineConfig& config,
                                          std::span<const Variant> variants);

struct SweepRow {
  double alpha;
  double accuracy_at_10;
  double precision_at_10;
  double recall_at_10;
  double mean_average_precision;
};

/// 0.1, 0.2, ..., 0.9.
std::vector<double> default_alpha_grid();

/// The full pipeline evaluated at each alpha. Throws std::domain_error for
/// an alpha outside [0, 1].
std::vector<SweepRow> alpha_sweep(const PreparedDataset& dataset,
                                  std::span<const double> alphas);
std::vector<SweepRow> alpha_sweep(const Manifest& manifest,
                                  std::span<const double> alphas,
                                  const PipelineConfig& config);

}  // namespace unrepro
