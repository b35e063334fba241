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
#include <span>

namespace unrepro {

/// p-values below this are reported as significant.
inline constexpr double kSignificanceLevel = 0.05;
/// Up to this many nonzero pairs the exact null distribution is used;
/// above it, the normal approximation with tie correction.
inline constexpr std::size_t kExactMaxPairs = 25;
/// Fewer nonzero pairs than this is rejected as carrying no evidence.
inline constexpr std::size_t kMinPairs = 6;

enum class PValueMethod { kExact, kNormal };

struct WilcoxonResult {
  double statistic = 0.0;  // min(w_plus, w_minus)
  double w_plus = 0.0;     // rank sum of positive x - y
  double w_minus = 0.0;
  double z = 0.0;          // normal approximation only
  double p_value = 1.0;    // two-sided
  std::size_t n = 0;       // pairs with nonzero difference
  PValueMethod method = PValueMethod::kExact;

  bool significant() const { return p_value < kSignificanceLevel; }
};

/// Two-sided paired signed-rank test of x against y. Zero differences are
/// dropped and tied magnitudes share their average rank. Without
/// continuity correction. Throws std::invalid_argument if the lengths
/// differ or fewer than kMinPairs nonzero differences remain.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> x,
                                    std::span<const double> y);

}  // namespace unrepro
