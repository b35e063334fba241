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

#include <cstdlib>
#include <cstring>

#include "unrepro/simd/kernels.h"

#ifdef UNREPRO_HAVE_AVX2
#include "avx2_table.h"
#endif

namespace unrepro::simd {

const KernelTable* avx2_kernels() {
#ifdef UNREPRO_HAVE_AVX2
  static const bool supported = __builtin_cpu_supports("avx2");
  if (supported)
    return &avx2_table();
#endif
  return nullptr;
}

std::vector<const KernelTable*> available_kernels() {
  std::vector<const KernelTable*> tables{&scalar_kernels()};
  if (const KernelTable* avx2 = avx2_kernels())
    tables.push_back(avx2);
  return tables;
}

const KernelTable& active_kernels() {
  static const KernelTable* selected = [] {
    std::vector<const KernelTable*> tables = available_kernels();
    if (const char* want = std::getenv("UNREPRO_SIMD")) {
      for (const KernelTable* t : tables)
        if (std::strcmp(t->name, want) == 0)
          return t;
    }
    return tables.back();
  }();
  return *selected;
}

}  // namespace unrepro::simd
