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

#include "unrepro/vsm.h"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "unrepro/errors.h"
#include "unrepro/parallel.h"
#include "unrepro/simd/kernels.h"

namespace unrepro {

std::string_view to_string(WeightScheme scheme) {
  return scheme == WeightScheme::kRatio ? "ratio" : "log-idf";
}

WeightScheme parse_weight_scheme(std::string_view name) {
  if (name == "ratio" || name == "paper")
    return WeightScheme::kRatio;
  if (name == "log-idf")
    return WeightScheme::kLogIdf;
  throw InputError("unknown weighting scheme '" + std::string(name) +
                   "' (expected ratio or log-idf)");
}

double tfidf_weight(std::uint64_t tf, std::uint64_t n_t, std::uint64_t n_docs,
                    WeightScheme scheme) {
  if (n_docs == 0 || n_t == 0 || n_t > n_docs || tf == 0)
    throw std::domain_error("tfidf_weight: need tf >= 1 and 1 <= n_t <= N");
  const double ratio = static_cast<double>(n_docs) / static_cast<double>(n_t);
  if (scheme == WeightScheme::kRatio)
    return static_cast<double>(tf) * ratio;
  return static_cast<double>(tf) * std::log(ratio);
}

namespace {

void Finish(WeightedVector& v) {
  v.norm = std::sqrt(
      simd::active_kernels().sum_squares(v.weights.data(), v.weights.size()));
}

}  // namespace

WeightedVector vectorize(std::span<const TermCount> doc, const Collection& stats,
                         WeightScheme scheme) {
  WeightedVector v;
  v.terms.reserve(doc.size());
  v.weights.reserve(doc.size());
  for (const TermCount& tc : doc) {
    double w = tfidf_weight(tc.count, stats.df(tc.term), stats.size(), scheme);
    if (w > 0.0) {
      v.terms.push_back(tc.term);
      v.weights.push_back(w);
    }
  }
  Finish(v);
  return v;
}

WeightedVector vectorize_terms(std::span<const std::string> terms,
                               const Collection& stats, WeightScheme scheme) {
  std::map<TermId, std::uint32_t> counts;
  for (const std::string& t : terms)
    if (auto id = stats.vocabulary().find(t))
      ++counts[*id];
  std::vector<TermCount> doc;
  doc.reserve(counts.size());
  for (const auto& [id, n] : counts)
    doc.push_back({id, n});
  return vectorize(doc, stats, scheme);
}

double cosine(const WeightedVector& l, const WeightedVector& s) {
  if (l.norm == 0.0 || s.norm == 0.0)
    return 0.0;
  double dot = 0.0;
  std::size_t i = 0, j = 0;
  while (i < l.terms.size() && j < s.terms.size()) {
    if (l.terms[i] < s.terms[j]) {
      ++i;
    } else if (s.terms[j] < l.terms[i]) {
      ++j;
    } else {
      dot += l.weights[i++] * s.weights[j++];
    }
  }
  return std::clamp(dot / (l.norm * s.norm), 0.0, 1.0);
}

std::vector<double> similarities(const WeightedVector& query,
                                 std::span<const WeightedVector> docs,
                                 unsigned jobs) {
  std::vector<double> out(docs.size(), 0.0);
  if (query.norm == 0.0)
    return out;
  TermId max_term = 0;
  for (const WeightedVector& d : docs)
    if (!d.terms.empty())
      max_term = std::max(max_term, d.terms.back());
  if (!query.terms.empty())
    max_term = std::max(max_term, query.terms.back());
  std::vector<double> dense(static_cast<std::size_t>(max_term) + 1, 0.0);
  for (std::size_t i = 0; i < query.terms.size(); ++i)
    dense[query.terms[i]] = query.weights[i];

  const simd::KernelTable& k = simd::active_kernels();
  parallel_for(docs.size(), jobs, [&](std::size_t i) {
    const WeightedVector& d = docs[i];
    if (d.norm == 0.0)
      return;
    double dot = k.gather_dot(dense.data(), d.terms.data(), d.weights.data(),
                              d.terms.size());
    out[i] = std::clamp(dot / (query.norm * d.norm), 0.0, 1.0);
  });
  return out;
}

std::vector<ScoredDoc> rank_by_similarity(const WeightedVector& query,
                                          std::span<const WeightedVector> docs,
                                          unsigned jobs) {
  std::vector<double> sims = similarities(query, docs, jobs);
  std::vector<ScoredDoc> ranked(docs.size());
  for (std::size_t i = 0; i < docs.size(); ++i)
    ranked[i] = {static_cast<std::uint32_t>(i), sims[i]};
  std::sort(ranked.begin(), ranked.end(), [](const ScoredDoc& a, const ScoredDoc& b) {
    std::int64_t ka = rank_key(a.score), kb = rank_key(b.score);
    return ka != kb ? ka > kb : a.doc_id < b.doc_id;
  });
  return ranked;
}

std::vector<WeightedVector> vectorize_all(const Collection& stats,
                                          WeightScheme scheme, unsigned jobs) {
  std::vector<WeightedVector> out(stats.size());
  parallel_for(stats.size(), jobs, [&](std::size_t i) {
    out[i] = vectorize(stats.document(static_cast<std::uint32_t>(i)).term_freqs,
                       stats, scheme);
  });
  return out;
}

}  // namespace unrepro
