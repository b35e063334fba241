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
#include <vector>

namespace unrepro::simd {

/// Per-byte character classes written by KernelTable::classify. A byte
/// carries at most one of these bits; zero means "other punctuation".
enum CharClass : std::uint8_t {
  kOther = 0,
  kWord = 1,   // [A-Za-z0-9_]
  kSpace = 2,  // ' ', \t, \n, \v, \f, \r
  kSlash = 4,  // '/'
};

/// The data-parallel inner loops of the pipeline. Every table computes the
/// same results as the scalar reference; the floating point kernels may
/// differ from it only by summation order.
struct KernelTable {
  const char* name;

  /// Index of the first `c` in `data[0, n)`, or `n` when absent.
  std::size_t (*find_byte)(const char* data, std::size_t n, char c);

  /// out[i] = CharClass of in[i].
  void (*classify)(const char* in, std::size_t n, std::uint8_t* out);

  /// ASCII-only lowercase; bytes >= 0x80 pass through unchanged.
  void (*lower_ascii)(const char* in, std::size_t n, char* out);

  /// Offset of the first occurrence of needle in haystack, or `n` when
  /// absent. An empty needle matches at 0.
  std::size_t (*find_substring)(const char* haystack, std::size_t n,
                                const char* needle, std::size_t m);

  /// sum_i dense[index[i]] * weight[i]
  double (*gather_dot)(const double* dense, const std::uint32_t* index,
                       const double* weight, std::size_t n);

  /// sum_i weight[i]^2
  double (*sum_squares)(const double* weight, std::size_t n);
};

const KernelTable& scalar_kernels();

/// AVX2 table, or nullptr when not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

/// Every table usable on this machine, scalar first.
std::vector<const KernelTable*> available_kernels();

/// The table selected at startup: the widest available, unless the
/// UNREPRO_SIMD environment variable names another one ("scalar", "avx2").
const KernelTable& active_kernels();

}  // namespace unrepro::simd
