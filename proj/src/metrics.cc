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

#include "unrepro/metrics.h"

#include <algorithm>
#include <stdexcept>

namespace unrepro {
namespace {

std::size_t HitsInTop(std::span<const std::string> ranked, const TruthSet& truth,
                      std::size_t n) {
  std::size_t end = std::min(n, ranked.size());
  std::size_t hits = 0;
  for (std::size_t i = 0; i < end; ++i)
    hits += truth.count(ranked[i]);
  return hits;
}

}  // namespace

double precision_at(std::span<const std::string> ranked, const TruthSet& truth,
                    std::size_t n) {
  if (n == 0)
    throw std::domain_error("precision_at: n must be >= 1");
  return static_cast<double>(HitsInTop(ranked, truth, n)) / static_cast<double>(n);
}

double recall_at(std::span<const std::string> ranked, const TruthSet& truth,
                 std::size_t n) {
  if (truth.empty())
    throw std::domain_error("recall_at: empty ground truth");
  return static_cast<double>(HitsInTop(ranked, truth, n)) /
         static_cast<double>(truth.size());
}

int accuracy_at(std::span<const std::string> ranked, const TruthSet& truth,
                std::size_t n) {
  if (n == 0)
    throw std::domain_error("accuracy_at: n must be >= 1");
  return HitsInTop(ranked, truth, n) > 0 ? 1 : 0;
}

double average_precision(std::span<const std::string> ranked, const TruthSet& truth) {
  if (truth.empty())
    throw std::domain_error("average_precision: empty ground truth");
  double sum = 0.0;
  std::size_t hits = 0;
  for (std::size_t k = 0; k < ranked.size(); ++k) {
    if (!truth.count(ranked[k]))
      continue;
    ++hits;
    sum += static_cast<double>(hits) / static_cast<double>(k + 1);
  }
  return sum / static_cast<double>(truth.size());
}

PackageMetrics compute_metrics(std::span<const std::string> ranked,
                               const TruthSet& truth) {
  PackageMetrics m;
  for (std::size_t c = 0; c < kCutoffs.size(); ++c) {
    m.accuracy[c] = accuracy_at(ranked, truth, kCutoffs[c]);
    m.precision[c] = precision_at(ranked, truth, kCutoffs[c]);
    m.recall[c] = recall_at(ranked, truth, kCutoffs[c]);
  }
  m.average_precision = average_precision(ranked, truth);
  return m;
}

PackageMetrics mean_metrics(std::span<const PackageMetrics> rows) {
  PackageMetrics mean;
  if (rows.empty())
    return mean;
  for (const PackageMetrics& r : rows) {
    for (std::size_t c = 0; c < kCutoffs.size(); ++c) {
      mean.accuracy[c] += r.accuracy[c];
      mean.precision[c] += r.precision[c];
      mean.recall[c] += r.recall[c];
    }
    mean.average_precision += r.average_precision;
  }
  const double n = static_cast<double>(rows.size());
  for (std::size_t c = 0; c < kCutoffs.size(); ++c) {
    mean.accuracy[c] /= n;
    mean.precision[c] /= n;
    mean.recall[c] /= n;
  }
  mean.average_precision /= n;
  return mean;
}

}  // namespace unrepro
