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

// Compiled with -mavx2. Nothing in here may run before dispatch.cc has
// confirmed CPU support.

#include <immintrin.h>

#include <cstring>

#include "avx2_table.h"
#include "unrepro/simd/kernels.h"

namespace unrepro::simd {
namespace {

inline __m256i InRange(__m256i v, char lo, char hi) {
  // Signed compares: bytes >= 0x80 are negative and never fall in an
  // ASCII range.
  __m256i ge = _mm256_cmpgt_epi8(v, _mm256_set1_epi8(static_cast<char>(lo - 1)));
  __m256i le = _mm256_cmpgt_epi8(_mm256_set1_epi8(static_cast<char>(hi + 1)), v);
  return _mm256_and_si256(ge, le);
}

std::size_t FindByte(const char* data, std::size_t n, char c) {
  const __m256i needle = _mm256_set1_epi8(c);
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
    unsigned mask = static_cast<unsigned>(
        _mm256_movemask_epi8(_mm256_cmpeq_epi8(v, needle)));
    if (mask)
      return i + static_cast<std::size_t>(__builtin_ctz(mask));
  }
  for (; i < n; ++i)
    if (data[i] == c)
      return i;
  return n;
}

void Classify(const char* in, std::size_t n, std::uint8_t* out) {
  const __m256i one = _mm256_set1_epi8(kWord);
  const __m256i two = _mm256_set1_epi8(kSpace);
  const __m256i four = _mm256_set1_epi8(kSlash);
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
    __m256i word = _mm256_or_si256(
        _mm256_or_si256(InRange(v, 'a', 'z'), InRange(v, 'A', 'Z')),
        _mm256_or_si256(InRange(v, '0', '9'),
                        _mm256_cmpeq_epi8(v, _mm256_set1_epi8('_'))));
    __m256i space = _mm256_or_si256(InRange(v, '\t', '\r'),
                                    _mm256_cmpeq_epi8(v, _mm256_set1_epi8(' ')));
    __m256i slash = _mm256_cmpeq_epi8(v, _mm256_set1_epi8('/'));
    __m256i cls = _mm256_or_si256(
        _mm256_and_si256(word, one),
        _mm256_or_si256(_mm256_and_si256(space, two),
                        _mm256_and_si256(slash, four)));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), cls);
  }
  if (i < n)
    scalar_kernels().classify(in + i, n - i, out + i);
}

void LowerAscii(const char* in, std::size_t n, char* out) {
  const __m256i delta = _mm256_set1_epi8('a' - 'A');
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
    __m256i upper = InRange(v, 'A', 'Z');
    v = _mm256_add_epi8(v, _mm256_and_si256(upper, delta));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), v);
  }
  if (i < n)
    scalar_kernels().lower_ascii(in + i, n - i, out + i);
}

// First/last byte filter, then memcmp on the candidates.
std::size_t FindSubstring(const char* haystack, std::size_t n,
                          const char* needle, std::size_t m) {
  if (m == 0)
    return 0;
  if (m > n)
    return n;
  const __m256i first = _mm256_set1_epi8(needle[0]);
  const __m256i last = _mm256_set1_epi8(needle[m - 1]);
  std::size_t i = 0;
  for (; i + m - 1 + 32 <= n; i += 32) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(haystack + i));
    __m256i b = _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(haystack + i + m - 1));
    unsigned mask = static_cast<unsigned>(_mm256_movemask_epi8(
        _mm256_and_si256(_mm256_cmpeq_epi8(a, first), _mm256_cmpeq_epi8(b, last))));
    while (mask) {
      unsigned bit = static_cast<unsigned>(__builtin_ctz(mask));
      if (std::memcmp(haystack + i + bit, needle, m) == 0)
        return i + bit;
      mask &= mask - 1;
    }
  }
  std::size_t rest = scalar_kernels().find_substring(haystack + i, n - i, needle, m);
  return rest == n - i ? n : i + rest;
}

double HorizontalSum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swapped = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

double GatherDot(const double* dense, const std::uint32_t* index,
                 const double* weight, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(index + i));
    __m256d d = _mm256_i32gather_pd(dense, idx, 8);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(d, _mm256_loadu_pd(weight + i)));
  }
  double sum = HorizontalSum(acc);
  for (; i < n; ++i)
    sum += dense[index[i]] * weight[i];
  return sum;
}

double SumSquares(const double* weight, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d w = _mm256_loadu_pd(weight + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(w, w));
  }
  double sum = HorizontalSum(acc);
  for (; i < n; ++i)
    sum += weight[i] * weight[i];
  return sum;
}

constexpr KernelTable kAvx2 = {
    "avx2", FindByte, Classify, LowerAscii, FindSubstring, GatherDot,
    SumSquares,
};

}  // namespace

const KernelTable& avx2_table() { return kAvx2; }

}  // namespace unrepro::simd
