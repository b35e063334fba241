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

#include <cstring>

#include "unrepro/simd/kernels.h"

namespace unrepro::simd {
namespace {

std::size_t FindByte(const char* data, std::size_t n, char c) {
  for (std::size_t i = 0; i < n; ++i)
    if (data[i] == c)
      return i;
  return n;
}

std::uint8_t ClassOf(unsigned char c) {
  if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
      (c >= '0' && c <= '9') || c == '_')
    return kWord;
  if (c == ' ' || (c >= '\t' && c <= '\r'))
    return kSpace;
  if (c == '/')
    return kSlash;
  return kOther;
}

void Classify(const char* in, std::size_t n, std::uint8_t* out) {
  for (std::size_t i = 0; i < n; ++i)
    out[i] = ClassOf(static_cast<unsigned char>(in[i]));
}

void LowerAscii(const char* in, std::size_t n, char* out) {
  for (std::size_t i = 0; i < n; ++i) {
    char c = in[i];
    out[i] = (c >= 'A' && c <= 'Z') ? static_cast<char>(c + ('a' - 'A')) : c;
  }
}

std::size_t FindSubstring(const char* haystack, std::size_t n,
                          const char* needle, std::size_t m) {
  if (m == 0)
    return 0;
  if (m > n)
    return n;
  for (std::size_t i = 0; i + m <= n; ++i)
    if (haystack[i] == needle[0] && std::memcmp(haystack + i, needle, m) == 0)
      return i;
  return n;
}

double GatherDot(const double* dense, const std::uint32_t* index,
                 const double* weight, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    sum += dense[index[i]] * weight[i];
  return sum;
}

double SumSquares(const double* weight, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    sum += weight[i] * weight[i];
  return sum;
}

constexpr KernelTable kScalar = {
    "scalar", FindByte, Classify, LowerAscii, FindSubstring, GatherDot,
    SumSquares,
};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace unrepro::simd
