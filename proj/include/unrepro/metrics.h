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

#include <array>
#include <cstddef>
#include <set>
#include <span>
#include <string>

namespace unrepro {

using TruthSet = std::set<std::string>;

/// |top-n ∩ truth| / n. A list shorter than n keeps n as the denominator.
/// Throws std::domain_error if n == 0.
double precision_at(std::span<const std::string> ranked, const TruthSet& truth,
                    std::size_t n);

/// |top-n ∩ truth| / |truth|. Throws std::domain_error for an empty truth.
double recall_at(std::span<const std::string> ranked, const TruthSet& truth,
                 std::size_t n);

/// 1 if any truth file is in the top n, else 0. Throws if n == 0.
int accuracy_at(std::span<const std::string> ranked, const TruthSet& truth,
                std::size_t n);

/// sum over every rank k of P@k * [k-th file is in truth], over |truth|.
/// Throws std::domain_error for an empty truth.
double average_precision(std::span<const std::string> ranked, const TruthSet& truth);

inline constexpr std::array<std::size_t, 3> kCutoffs = {1, 5, 10};

/// The per-package numbers reported for each cutoff in kCutoffs.
struct PackageMetrics {
  std::array<double, 3> accuracy{};
  std::array<double, 3> precision{};
  std::array<double, 3> recall{};
  double average_precision = 0.0;
};

PackageMetrics compute_metrics(std::span<const std::string> ranked,
                               const TruthSet& truth);

/// Element-wise arithmetic mean; all zeros for an empty input.
PackageMetrics mean_metrics(std::span<const PackageMetrics> rows);

}  // namespace unrepro
