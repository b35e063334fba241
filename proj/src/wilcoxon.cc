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

#include "unrepro/wilcoxon.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace unrepro {
namespace {

// Exact two-sided p-value. Ranks are doubled so that average ranks of ties
// stay integral; counts[s] is the number of sign assignments whose doubled
// positive rank sum is s.
double ExactPValue(const std::vector<long>& doubled_ranks, long doubled_w_plus) {
  long total = std::accumulate(doubled_ranks.begin(), doubled_ranks.end(), 0L);
  std::vector<double> counts(static_cast<std::size_t>(total) + 1, 0.0);
  counts[0] = 1.0;
  long reach = 0;
  for (long r : doubled_ranks) {
    for (long s = reach; s >= 0; --s)
      counts[static_cast<std::size_t>(s + r)] += counts[static_cast<std::size_t>(s)];
    reach += r;
  }
  const double all = std::ldexp(1.0, static_cast<int>(doubled_ranks.size()));
  double lower = 0.0, upper = 0.0;
  for (long s = 0; s <= total; ++s) {
    if (s <= doubled_w_plus)
      lower += counts[static_cast<std::size_t>(s)];
    if (s >= doubled_w_plus)
      upper += counts[static_cast<std::size_t>(s)];
  }
  return std::min(1.0, 2.0 * std::min(lower, upper) / all);
}

}  // namespace

WilcoxonResult wilcoxon_signed_rank(std::span<const double> x,
                                    std::span<const double> y) {
  if (x.size() != y.size())
    throw std::invalid_argument("wilcoxon_signed_rank: samples differ in length");
  std::vector<double> diffs;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] - y[i] != 0.0)
      diffs.push_back(x[i] - y[i]);
  const std::size_t n = diffs.size();
  if (n < kMinPairs)
    throw std::invalid_argument(
        "wilcoxon_signed_rank: fewer than 6 nonzero differences");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::fabs(diffs[a]) < std::fabs(diffs[b]);
  });

  // Doubled average ranks: a tie group covering 1-based ranks [i+1, j]
  // gets (i + 1 + j) / 2 each.
  std::vector<long> doubled(n);
  double tie_term = 0.0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && std::fabs(diffs[order[j]]) == std::fabs(diffs[order[i]]))
      ++j;
    long rank2 = static_cast<long>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k)
      doubled[order[k]] = rank2;
    double t = static_cast<double>(j - i);
    tie_term += t * t * t - t;
    i = j;
  }

  WilcoxonResult r;
  r.n = n;
  long w_plus2 = 0, w_minus2 = 0;
  for (std::size_t i = 0; i < n; ++i)
    (diffs[i] > 0 ? w_plus2 : w_minus2) += doubled[i];
  r.w_plus = w_plus2 / 2.0;
  r.w_minus = w_minus2 / 2.0;
  r.statistic = std::min(r.w_plus, r.w_minus);

  const double nn = static_cast<double>(n);
  if (n <= kExactMaxPairs) {
    r.method = PValueMethod::kExact;
    r.p_value = ExactPValue(doubled, w_plus2);
  } else {
    r.method = PValueMethod::kNormal;
    const double mean = nn * (nn + 1.0) / 4.0;
    const double var = nn * (nn + 1.0) * (2.0 * nn + 1.0) / 24.0 - tie_term / 48.0;
    r.z = (r.w_plus - mean) / std::sqrt(var);
    r.p_value = std::min(1.0, std::erfc(std::fabs(r.z) / std::sqrt(2.0)));
  }
  return r;
}

}  // namespace unrepro
