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

#include <string>
#include <string_view>
#include <vector>

#include "unrepro/simd/kernels.h"

namespace unrepro {

/// Term extraction shared by source files, build-log segments and queries.
///
/// Text is cut into whitespace-delimited chunks. Each chunk emits, in order:
///   1. its maximal [A-Za-z0-9_] runs of length >= 2, lowercased;
///   2. when the chunk contains '/', each '/'-separated component, trimmed
///      of leading and trailing non-word bytes, that still contains a
///      non-word byte (e.g. "libcompat.a", "bin-x86_64") and is at least two
///      bytes long, lowercased.
/// Components made only of word bytes are not repeated, since step 1
/// already emitted them.
///
/// "usr/lib/libcompat.a" -> usr, lib, libcompat, libcompat.a
std::vector<std::string> tokenize(std::string_view text);

/// Streaming form of tokenize(). The views passed to `sink` point into a
/// scratch buffer and are only valid for the duration of the call.
template <class Sink>
void for_each_token(std::string_view text, Sink&& sink,
                    const simd::KernelTable& kernels = simd::active_kernels());

namespace detail {

struct TokenScratch {
  std::string lower;
  std::vector<std::uint8_t> cls;
};

void prepare_scratch(std::string_view text, const simd::KernelTable& kernels,
                     TokenScratch& scratch);

}  // namespace detail

template <class Sink>
void for_each_token(std::string_view text, Sink&& sink,
                    const simd::KernelTable& kernels) {
  thread_local detail::TokenScratch scratch;
  detail::prepare_scratch(text, kernels, scratch);
  const std::uint8_t* cls = scratch.cls.data();
  const char* lower = scratch.lower.data();
  const std::size_t n = text.size();

  std::size_t i = 0;
  while (i < n) {
    while (i < n && cls[i] == simd::kSpace)
      ++i;
    const std::size_t begin = i;
    bool has_slash = false;
    while (i < n && cls[i] != simd::kSpace) {
      if (cls[i] == simd::kWord) {
        std::size_t start = i;
        while (i < n && cls[i] == simd::kWord)
          ++i;
        if (i - start >= 2)
          sink(std::string_view(lower + start, i - start));
      } else {
        has_slash |= cls[i] == simd::kSlash;
        ++i;
      }
    }
    if (!has_slash)
      continue;
    const std::size_t end = i;
    std::size_t c = begin;
    while (c <= end) {
      std::size_t d = c;
      while (d < end && cls[d] != simd::kSlash)
        ++d;
      std::size_t lo = c, hi = d;
      while (lo < hi && cls[lo] != simd::kWord)
        ++lo;
      while (hi > lo && cls[hi - 1] != simd::kWord)
        --hi;
      if (hi - lo >= 2) {
        bool mixed = false;
        for (std::size_t k = lo; k < hi && !mixed; ++k)
          mixed = cls[k] != simd::kWord;
        if (mixed)
          sink(std::string_view(lower + lo, hi - lo));
      }
      c = d + 1;
    }
  }
}

}  // namespace unrepro
