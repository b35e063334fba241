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

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "unrepro/tokenizer.h"

namespace unrepro {
namespace {

using Tokens = std::vector<std::string>;

TEST(Tokenize, GoldenCases) {
  EXPECT_EQ(tokenize("usr/lib/libcompat.a"),
            (Tokens{"usr", "lib", "libcompat", "libcompat.a"}));
  EXPECT_EQ(tokenize("ar cru bin-x86_64/libcompat.a"),
            (Tokens{"ar", "cru", "bin", "x86_64", "libcompat", "bin-x86_64",
                    "libcompat.a"}));
  EXPECT_EQ(tokenize("./usr/bin/hello"), (Tokens{"usr", "bin", "hello"}));
  EXPECT_EQ(tokenize("make[1]: Entering directory '/build/pkg-1.0'"),
            (Tokens{"make", "entering", "directory", "build", "pkg", "pkg-1.0"}));
  EXPECT_EQ(tokenize("CFLAGS=-O2 -Wall"), (Tokens{"cflags", "o2", "wall"}));
  EXPECT_EQ(tokenize("Hello, World!"), (Tokens{"hello", "world"}));
}

TEST(Tokenize, DropsShortTokensAndEmptyInput) {
  EXPECT_TRUE(tokenize("").empty());
  EXPECT_TRUE(tokenize("a b c / . -").empty());
  EXPECT_EQ(tokenize("a/bb/c"), (Tokens{"bb"}));
}

TEST(Tokenize, NonAsciiBytesSeparateWords) {
  EXPECT_EQ(tokenize("caf\xC3\xA9 na\xC3\xAFve"), (Tokens{"caf", "na", "ve"}));
}

TEST(Tokenize, PathComponentsTrimPunctuation) {
  EXPECT_EQ(tokenize("\"src/version.c\","), (Tokens{"src", "version", "version.c"}));
  EXPECT_EQ(tokenize("$(DESTDIR)/usr/share/doc/pkg/doc.txt.gz"),
            (Tokens{"destdir", "usr", "share", "doc", "pkg", "doc", "txt", "gz",
                    "doc.txt.gz"}));
}

TEST(Tokenize, IsIdenticalUnderEveryKernelTable) {
  std::mt19937_64 rng(5);
  const char alphabet[] = "abXY_09/.- \t\n\"'$(){}\x80\xff";
  std::uniform_int_distribution<std::size_t> pick(0, sizeof(alphabet) - 2);
  for (int round = 0; round < 300; ++round) {
    std::string text(std::uniform_int_distribution<std::size_t>(0, 400)(rng), ' ');
    for (char& c : text)
      c = alphabet[pick(rng)];
    Tokens expected;
    for_each_token(text, [&](std::string_view t) { expected.emplace_back(t); },
                   simd::scalar_kernels());
    for (const simd::KernelTable* k : simd::available_kernels()) {
      Tokens got;
      for_each_token(text, [&](std::string_view t) { got.emplace_back(t); }, *k);
      EXPECT_EQ(got, expected) << k->name;
    }
    for (const std::string& t : expected) {
      EXPECT_GE(t.size(), 2u);
      for (char c : t) {
        EXPECT_FALSE(c >= 'A' && c <= 'Z');
        EXPECT_FALSE(c == ' ' || c == '\t' || c == '\n');
      }
    }
  }
}

}  // namespace
}  // namespace unrepro
