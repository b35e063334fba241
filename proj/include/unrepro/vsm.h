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

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unrepro/corpus.h"

namespace unrepro {

enum class WeightScheme {
  kRatio,   // tf * N / n_t, the default
  kLogIdf,  // tf * ln(N / n_t)
};

std::string_view to_string(WeightScheme scheme);
/// "ratio" (also spelled "paper") or "log-idf"; throws InputError otherwise.
WeightScheme parse_weight_scheme(std::string_view name);

/// TF-IDF weight of a term occurring `tf` times in a document, given its
/// document frequency `n_t` among `n_docs` documents. Throws
/// std::domain_error unless tf >= 1 and 1 <= n_t <= n_docs.
double tfidf_weight(std::uint64_t tf, std::uint64_t n_t, std::uint64_t n_docs,
                    WeightScheme scheme);

/// Sparse non-negative vector; zero weights are not stored.
struct WeightedVector {
  std::vector<TermId> terms;  // ascending
  std::vector<double> weights;
  double norm = 0.0;
};

/// TF-IDF vector of a document of `stats`.
WeightedVector vectorize(std::span<const TermCount> doc, const Collection& stats,
                         WeightScheme scheme);

/// TF-IDF vector of a query given as a term sequence. Repeated terms keep
/// their multiplicity; terms absent from `stats` are dropped.
WeightedVector vectorize_terms(std::span<const std::string> terms,
                               const Collection& stats, WeightScheme scheme);

/// l.s / (|l||s|), clamped to [0, 1]; 0 when either norm is 0.
double cosine(const WeightedVector& l, const WeightedVector& s);

/// Similarity values are compared at 1e-12 resolution, so results that
/// differ only by summation order rank identically.
inline std::int64_t rank_key(double score) {
  return std::llround(score * 1e12);
}

struct ScoredDoc {
  std::uint32_t doc_id;
  double score;
};

/// Cosine of `query` against every document vector (indexed by position).
std::vector<double> similarities(const WeightedVector& query,
                                 std::span<const WeightedVector> docs,
                                 unsigned jobs = 1);

/// Documents by descending cosine, ties by ascending doc id. Doc ids are
/// positions in `docs`.
std::vector<ScoredDoc> rank_by_similarity(const WeightedVector& query,
                                          std::span<const WeightedVector> docs,
                                          unsigned jobs = 1);

/// Vectors for every document of a collection.
std::vector<WeightedVector> vectorize_all(const Collection& stats,
                                          WeightScheme scheme, unsigned jobs = 1);

}  // namespace unrepro
