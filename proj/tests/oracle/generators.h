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

// Seeded random inputs shared by the property tests and the acceptance
// suite.

#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace gen {

struct RankingCase {
  std::vector<std::string> ranked;  // unique paths
  std::set<std::string> truth;      // non-empty, may include unranked paths
};

// Up to 20 ranked files drawn from a pool of 30, truth of 1..5 files.
inline RankingCase ranking_case(std::mt19937_64& rng) {
  std::vector<std::string> pool;
  for (int i = 0; i < 30; ++i)
    pool.push_back("dir" + std::to_string(i % 4) + "/file" + std::to_string(i) + ".c");
  std::shuffle(pool.begin(), pool.end(), rng);
  RankingCase c;
  int len = std::uniform_int_distribution<int>(0, 20)(rng);
  c.ranked.assign(pool.begin(), pool.begin() + len);
  std::shuffle(pool.begin(), pool.end(), rng);
  int n_truth = std::uniform_int_distribution<int>(1, 5)(rng);
  // Bias truth toward ranked files so hits are common.
  for (int i = 0; i < n_truth; ++i) {
    bool from_ranked = !c.ranked.empty() && std::bernoulli_distribution(0.7)(rng);
    if (from_ranked)
      c.truth.insert(c.ranked[std::uniform_int_distribution<std::size_t>(
          0, c.ranked.size() - 1)(rng)]);
    else
      c.truth.insert(pool[i]);
  }
  return c;
}

struct CorpusCase {
  std::vector<std::vector<std::string>> docs;  // token lists
  std::vector<std::string> query;
};

// Up to `max_docs` documents over a vocabulary of up to `max_terms` terms,
// Zipf-like term frequencies, some empty documents and duplicate documents.
inline CorpusCase corpus_case(std::mt19937_64& rng, int max_docs = 50,
                              int max_terms = 30) {
  CorpusCase c;
  int n_docs = std::uniform_int_distribution<int>(1, max_docs)(rng);
  int n_terms = std::uniform_int_distribution<int>(1, max_terms)(rng);
  std::vector<double> zipf;
  for (int t = 0; t < n_terms; ++t)
    zipf.push_back(1.0 / (t + 1));
  std::discrete_distribution<int> term(zipf.begin(), zipf.end());
  auto name = [](int t) { return "t" + std::to_string(t); };
  for (int d = 0; d < n_docs; ++d) {
    if (d > 0 && std::bernoulli_distribution(0.05)(rng)) {
      c.docs.push_back(c.docs[d - 1]);
      continue;
    }
    int len = std::bernoulli_distribution(0.05)(rng)
                  ? 0
                  : std::uniform_int_distribution<int>(1, 40)(rng);
    std::vector<std::string> doc;
    for (int i = 0; i < len; ++i)
      doc.push_back(name(term(rng)));
    c.docs.push_back(doc);
  }
  int qlen = std::uniform_int_distribution<int>(0, 12)(rng);
  for (int i = 0; i < qlen; ++i) {
    // Occasionally a term missing from every document.
    if (std::bernoulli_distribution(0.1)(rng))
      c.query.push_back("absent" + std::to_string(i));
    else
      c.query.push_back(name(std::uniform_int_distribution<int>(0, n_terms - 1)(rng)));
  }
  return c;
}

}  // namespace gen
