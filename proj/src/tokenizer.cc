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

#include "unrepro/tokenizer.h"

namespace unrepro {
namespace detail {

void prepare_scratch(std::string_view text, const simd::KernelTable& kernels,
                     TokenScratch& scratch) {
  scratch.lower.resize(text.size());
  scratch.cls.resize(text.size());
  kernels.lower_ascii(text.data(), text.size(), scratch.lower.data());
  kernels.classify(text.data(), text.size(), scratch.cls.data());
}

}  // namespace detail

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  for_each_token(text, [&](std::string_view t) { out.emplace_back(t); });
  return out;
}

}  // namespace unrepro
