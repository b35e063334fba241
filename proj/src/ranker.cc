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

#include "unrepro/ranker.h"

#include <algorithm>
#include <stdexcept>

#include "unrepro/errors.h"
#include "unrepro/tokenizer.h"

namespace unrepro {

std::string_view to_string(Variant variant) {
  switch (variant) {
    case Variant::kHeuristicOnly:
      return "hf";
    case Variant::kRankingOnly:
      return "fr";
    case Variant::kRankingWithAugmentation:
      return "fr+qa";
    case Variant::kFull:
      return "full";
  }
  return "full";
}

Variant parse_variant(std::string_view name) {
  for (Variant v : {Variant::kHeuristicOnly, Variant::kRankingOnly,
                    Variant::kRankingWithAugmentation, Variant::kFull})
    if (to_string(v) == name)
      return v;
  throw InputError("unknown variant '" + std::string(name) +
                   "' (expected hf, fr, fr+qa or full)");
}

AugmentedQuery augment_query(const BasicQuery& basic,
                             std::span<const CommandSegment> segments,
                             std::size_t k, WeightScheme scheme) {
  AugmentedQuery q;
  q.basic = basic;
  q.terms = basic.terms;
  if (k == 0 || segments.empty() || basic.terms.empty())
    return q;

  Collection collection;
  for (const CommandSegment& s : segments)
    collection.add(s.directory, s.term_freqs);
  std::vector<WeightedVector> docs = vectorize_all(collection, scheme);
  WeightedVector query = vectorize_terms(basic.terms, collection, scheme);
  for (const ScoredDoc& d : rank_by_similarity(query, docs)) {
    if (q.segment_ids.size() == k || d.score <= 0.0)
      break;
    q.segment_ids.push_back(segments[d.doc_id].segment_id);
    q.augmentation.push_back(segments[d.doc_id].text);
    for (std::string& t : tokenize(segments[d.doc_id].text))
      q.terms.push_back(std::move(t));
  }
  return q;
}

double score_file(double sim, bool hf_matched, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::domain_error("alpha must lie in [0, 1]");
  return (1.0 - alpha) * sim + alpha * (hf_matched ? 1.0 : 0.0);
}

LocalizationEvidence gather_evidence(const Corpus& corpus, std::string_view diff_log,
                                     std::string_view build_log,
                                     const LocalizeOptions& options,
                                     const RuleSet& rules) {
  if (corpus.n_docs() == 0)
    throw InputError("the source tree has no text files to rank");

  LocalizationEvidence ev;
  BasicQuery basic = extract_basic_query(diff_log, options.diff);
  if (basic.file_names.empty())
    ev.warnings.push_back(
        "no file names found in the diff log; ranking by rule matches only");
  SegmentedLog log = segment_build_log(build_log, options.build);
  for (std::string& w : log.warnings)
    ev.warnings.push_back("build log " + w);
  ev.query = augment_query(basic, log.segments, options.augment_top_k,
                           options.weighting);

  const Collection& files = corpus.collection();
  std::vector<WeightedVector> docs = vectorize_all(files, options.weighting, options.jobs);
  ev.basic_similarity = similarities(
      vectorize_terms(ev.query.basic.terms, files, options.weighting), docs,
      options.jobs);
  ev.augmented_similarity = similarities(
      vectorize_terms(ev.query.terms, files, options.weighting), docs, options.jobs);

  ev.paths.reserve(files.size());
  for (const Document& d : files.documents())
    ev.paths.push_back(d.path);
  ev.matches = filter_corpus(corpus, rules, options.jobs);
  ev.hf_matched.assign(files.size(), 0);
  std::size_t doc = 0;
  for (const RuleMatch& m : ev.matches) {
    while (ev.paths[doc] != m.path)
      ++doc;
    ev.hf_matched[doc] = 1;
  }
  return ev;
}

double effective_alpha(Variant variant, double alpha) {
  switch (variant) {
    case Variant::kHeuristicOnly:
      return 1.0;
    case Variant::kRankingOnly:
    case Variant::kRankingWithAugmentation:
      return 0.0;
    case Variant::kFull:
      break;
  }
  return alpha;
}

RankedList fuse(const LocalizationEvidence& ev, Variant variant, double alpha) {
  RankedList out;
  out.variant = variant;
  alpha = effective_alpha(variant, alpha);
  const std::vector<double>& sims = variant == Variant::kRankingOnly
                                        ? ev.basic_similarity
                                        : ev.augmented_similarity;
  out.alpha = alpha;
  out.warnings = ev.warnings;
  out.entries.reserve(ev.paths.size());
  auto match = ev.matches.begin();
  for (std::size_t i = 0; i < ev.paths.size(); ++i) {
    bool hf = ev.hf_matched[i] != 0;
    RankedEntry e{ev.paths[i], score_file(sims[i], hf, alpha), hf, sims[i], {}};
    if (hf) {
      while (match->path != ev.paths[i])
        ++match;
      e.evidence = match->lines;
    }
    out.entries.push_back(std::move(e));
  }
  // Paths are already in ascending order, so a stable sort on the score
  // key alone breaks ties by path.
  std::stable_sort(out.entries.begin(), out.entries.end(),
                   [](const RankedEntry& a, const RankedEntry& b) {
                     return rank_key(a.score) > rank_key(b.score);
                   });
  return out;
}

RankedList localize(const Corpus& corpus, std::string_view diff_log,
                    std::string_view build_log, const LocalizeOptions& options,
                    const RuleSet& rules) {
  if (!(options.alpha >= 0.0 && options.alpha <= 1.0))
    throw std::domain_error("alpha must lie in [0, 1]");
  return fuse(gather_evidence(corpus, diff_log, build_log, options, rules),
              options.variant, options.alpha);
}

}  // namespace unrepro
