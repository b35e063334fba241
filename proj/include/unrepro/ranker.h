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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unrepro/corpus.h"
#include "unrepro/logparse.h"
#include "unrepro/rules.h"
#include "unrepro/vsm.h"

namespace unrepro {

/// Which evidence a ranking uses.
enum class Variant {
  kHeuristicOnly,            // "hf": rule matches only
  kRankingOnly,              // "fr": similarity to the basic query
  kRankingWithAugmentation,  // "fr+qa": similarity to the augmented query
  kFull,                     // "full": fr+qa fused with rule matches
};

std::string_view to_string(Variant variant);
/// "hf", "fr", "fr+qa" or "full"; throws InputError otherwise.
Variant parse_variant(std::string_view name);

inline constexpr double kDefaultAlpha = 0.3;

/// The basic query followed by the text of the build-log segments most
/// similar to it.
struct AugmentedQuery {
  BasicQuery basic;
  std::vector<std::uint32_t> segment_ids;  // appended segments, best first
  std::vector<std::string> augmentation;   // their texts
  std::vector<std::string> terms;          // basic.terms, then each text's tokens
};

/// Ranks `segments` against the basic query by TF-IDF cosine over the
/// segment collection and appends the top `k` with nonzero similarity.
AugmentedQuery augment_query(const BasicQuery& basic,
                             std::span<const CommandSegment> segments,
                             std::size_t k,
                             WeightScheme scheme = WeightScheme::kRatio);

/// (1 - alpha) * sim + alpha * w, with w = 1 for rule-matched files.
/// Throws std::domain_error unless alpha is in [0, 1].
double score_file(double sim, bool hf_matched, double alpha);

struct RankedEntry {
  std::string path;
  double score = 0.0;
  bool hf_matched = false;
  double similarity = 0.0;
  std::vector<LineHit> evidence;  // rule hits backing hf_matched
};

struct RankedList {
  std::vector<RankedEntry> entries;  // score descending, ties by path
  double alpha = kDefaultAlpha;
  Variant variant = Variant::kFull;
  std::vector<std::string> warnings;
};

struct LocalizeOptions {
  double alpha = kDefaultAlpha;
  Variant variant = Variant::kFull;
  WeightScheme weighting = WeightScheme::kRatio;
  std::size_t augment_top_k = 1;
  DiffLogOptions diff;
  BuildLogOptions build;
  unsigned jobs = 0;
};

/// Everything a ranking needs, computed once so that several variants and
/// alpha values can share it. Vectors are indexed by doc id.
struct LocalizationEvidence {
  std::vector<std::string> paths;
  std::vector<double> basic_similarity;
  std::vector<double> augmented_similarity;
  std::vector<char> hf_matched;
  std::vector<RuleMatch> matches;  // path order
  AugmentedQuery query;
  std::vector<std::string> warnings;
};

/// Throws InputError for an empty corpus. An empty basic query is only a
/// warning: every similarity is then 0.
LocalizationEvidence gather_evidence(const Corpus& corpus, std::string_view diff_log,
                                     std::string_view build_log,
                                     const LocalizeOptions& options,
                                     const RuleSet& rules);

/// The alpha a variant actually fuses with: 1 for kHeuristicOnly, 0 for
/// the ranking-only variants, `alpha` for kFull.
double effective_alpha(Variant variant, double alpha);

/// Scores and sorts every file. kHeuristicOnly scores by rule match alone
/// (alpha = 1), the two ranking-only variants use alpha = 0, and kFull uses
/// `alpha`.
RankedList fuse(const LocalizationEvidence& evidence, Variant variant, double alpha);

/// The whole pipeline: basic query, build-log segmentation, augmentation,
/// rule filtering, per-file similarity and score fusion. Returns every text
/// file of the corpus.
RankedList localize(const Corpus& corpus, std::string_view diff_log,
                    std::string_view build_log, const LocalizeOptions& options,
                    const RuleSet& rules = RuleSet::builtin());

}  // namespace unrepro
