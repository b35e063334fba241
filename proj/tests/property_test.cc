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

// Randomized invariants that cut across modules.

#include <gtest/gtest.h>

#include <algorithm>
#include <json.hpp>
#include <random>
#include <sstream>
#include <thread>

#include "oracle/generators.h"
#include "oracle/packages.h"
#include "unrepro/cli.h"
#include "unrepro/logparse.h"
#include "unrepro/metrics.h"
#include "unrepro/ranker.h"
#include "unrepro/rules.h"
#include "unrepro/tokenizer.h"
#include "unrepro/vsm.h"

namespace unrepro {
namespace {

using testing_paths::fixtures;
using testing_paths::Package;

const std::vector<Package>& Packages() {
  static const std::vector<Package> packages = testing_paths::load_packages();
  return packages;
}

const RuleSet& Builtins() {
  static const RuleSet rules = RuleSet::builtin();
  return rules;
}

std::string RandomText(std::mt19937_64& rng, int pieces) {
  static const char* words[] = {"gzip", "-9", "src/a.c", "$(date)", "|", "sort", "ls",
                                "__DATE__", "x_1", "Ab", "\n", " ", "\t", "/", "é",
                                "lib/libfoo.a", "wildcard", "keys %h", "localtime $x"};
  std::uniform_int_distribution<int> pick(0, std::size(words) - 1);
  std::string s;
  for (int i = 0; i < pieces; ++i)
    s += words[pick(rng)];
  return s;
}

TEST(CorpusProperties, IngestIsIdempotent) {
  for (const Package& p : Packages()) {
    Corpus again = ingest_tree(fixtures() / "packages" / p.id / "src");
    EXPECT_EQ(again, p.corpus) << p.id;
  }
}

TEST(CorpusProperties, DocumentFrequencyByBruteForce) {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 100; ++round) {
    gen::CorpusCase cc = gen::corpus_case(rng);
    std::vector<std::pair<std::string, std::string>> texts;
    for (std::size_t d = 0; d < cc.docs.size(); ++d) {
      std::string t;
      for (const std::string& w : cc.docs[d])
        t += w + " ";
      texts.push_back({"d" + std::to_string(d), t});
    }
    Collection c = Collection::from_texts(texts);
    for (TermId id = 0; id < c.vocabulary().size(); ++id) {
      const std::string& term = c.vocabulary().term(id);
      std::uint32_t df = 0;
      for (const auto& doc : cc.docs)
        df += std::find(doc.begin(), doc.end(), term) != doc.end();
      EXPECT_EQ(c.df(id), df) << term;
    }
  }
}

TEST(TokenizerProperties, DeterministicAcrossThreads) {
  std::mt19937_64 rng(32);
  std::vector<std::string> texts;
  for (int i = 0; i < 200; ++i)
    texts.push_back(RandomText(rng, 60));
  std::vector<std::vector<std::string>> want;
  for (const std::string& t : texts)
    want.push_back(tokenize(t));
  std::vector<std::thread> threads;
  std::vector<int> mismatches(4, 0);
  for (int w = 0; w < 4; ++w)
    threads.emplace_back([&, w] {
      for (std::size_t i = 0; i < texts.size(); ++i)
        mismatches[w] += tokenize(texts[i]) != want[i];
    });
  for (std::thread& t : threads)
    t.join();
  EXPECT_EQ(mismatches, (std::vector<int>{0, 0, 0, 0}));
}

TEST(LogProperties, BasicQueryIgnoresHunkBodies) {
  for (const Package& p : Packages()) {
    std::string doubled;
    for (std::string_view line : split_lines(p.diff_log)) {
      doubled += std::string(line) + "\n";
      // Body lines: everything that is not a header is repeated.
      if (line.find("├──") == std::string_view::npos && !line.starts_with("---") &&
          !line.starts_with("+++"))
        doubled += std::string(line) + "\n";
    }
    EXPECT_EQ(extract_basic_query(doubled).file_names,
              extract_basic_query(p.diff_log).file_names)
        << p.id;
  }
}

TEST(LogProperties, LineConservationOnFixtures) {
  for (const Package& p : Packages()) {
    SegmentedLog log = segment_build_log(p.build_log);
    std::size_t lines = 0;
    for (const CommandSegment& s : log.segments)
      lines += s.lines.size();
    EXPECT_EQ(lines, split_lines(p.build_log).size()) << p.id;
    EXPECT_EQ(log.line_count, lines);
  }
}

TEST(VsmProperties, CosineScaleSymmetryAndBound) {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> weight(0.0, 5.0), scale(1e-3, 1e3);
  auto random_vector = [&] {
    WeightedVector v;
    for (TermId t = 0; t < 40; ++t)
      if (std::bernoulli_distribution(0.3)(rng)) {
        v.terms.push_back(t);
        v.weights.push_back(weight(rng));
      }
    for (double w : v.weights)
      v.norm += w * w;
    v.norm = std::sqrt(v.norm);
    return v;
  };
  for (int round = 0; round < 500; ++round) {
    WeightedVector l = random_vector(), s = random_vector();
    double c = scale(rng);
    WeightedVector scaled = l;
    for (double& w : scaled.weights)
      w *= c;
    scaled.norm *= c;
    double base = cosine(l, s);
    EXPECT_NEAR(cosine(scaled, s), base, 1e-9);
    EXPECT_NEAR(cosine(s, l), base, 1e-12);
    EXPECT_GE(base, 0.0);
    EXPECT_LE(base, 1.0);
  }
}

TEST(RuleProperties, ScanIsLineLocal) {
  std::mt19937_64 rng(34);
  for (int round = 0; round < 300; ++round) {
    std::string text = RandomText(rng, 40);
    std::vector<LineHit> want;
    std::vector<std::string_view> lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i)
      for (const CompiledRule& r : Builtins().rules())
        if (match_line(r, lines[i]))
          want.push_back({r.rule().id, i + 1});
    EXPECT_EQ(scan_text(text, Builtins()), want) << text;
  }
}

TEST(RuleProperties, MonotoneAndOrderIndependent) {
  std::mt19937_64 rng(35);
  for (int round = 0; round < 50; ++round) {
    std::vector<SourceFile> files;
    int n = std::uniform_int_distribution<int>(1, 12)(rng);
    for (int i = 0; i < n; ++i)
      files.push_back({"f" + std::to_string(i) + ".sh", RandomText(rng, 20), true});
    Corpus corpus = Corpus::from_files(files);
    std::vector<RuleMatch> all = filter_corpus(corpus, Builtins());

    // Fewer rules never add matches.
    std::vector<Rule> half(builtin_rules().begin(), builtin_rules().begin() + 7);
    for (const RuleMatch& m : filter_corpus(corpus, RuleSet(half))) {
      auto it = std::find_if(all.begin(), all.end(),
                             [&](const RuleMatch& a) { return a.path == m.path; });
      ASSERT_NE(it, all.end());
      EXPECT_TRUE(std::includes(it->rule_ids.begin(), it->rule_ids.end(),
                                m.rule_ids.begin(), m.rule_ids.end()));
    }

    // Input order is irrelevant.
    std::vector<SourceFile> shuffled = files;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(filter_corpus(Corpus::from_files(shuffled), Builtins()), all);

    // Dropping a file drops exactly its matches.
    std::vector<SourceFile> fewer = files;
    std::string gone = fewer.back().path;
    fewer.pop_back();
    std::vector<RuleMatch> expected;
    for (const RuleMatch& m : all)
      if (m.path != gone)
        expected.push_back(m);
    EXPECT_EQ(filter_corpus(Corpus::from_files(fewer), Builtins()), expected);
  }
}

TEST(RankerProperties, ScoresBoundedAndMonotoneInAlpha) {
  std::mt19937_64 rng(36);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int round = 0; round < 1000; ++round) {
    double sim = unit(rng), a = unit(rng), b = unit(rng);
    if (a > b)
      std::swap(a, b);
    EXPECT_LE(score_file(sim, true, a), score_file(sim, true, b) + 1e-15);
    EXPECT_GE(score_file(sim, false, a), score_file(sim, false, b) - 1e-15);
    for (bool hf : {false, true}) {
      double s = score_file(sim, hf, a);
      EXPECT_GE(s, 0.0);
      EXPECT_LE(s, 1.0);
    }
    // Equal similarity: the rule-matched file never scores lower.
    EXPECT_GE(score_file(sim, true, a), score_file(sim, false, a));
  }
}

TEST(RankerProperties, ConsistentWithComponentsOnFixtures) {
  for (const Package& p : Packages()) {
    LocalizationEvidence ev =
        gather_evidence(p.corpus, p.diff_log, p.build_log, {}, Builtins());
    // alpha = 0 is the plain vector space ranking of the augmented query.
    const Collection& files = p.corpus.collection();
    std::vector<WeightedVector> docs = vectorize_all(files, WeightScheme::kRatio);
    std::vector<ScoredDoc> vsm = rank_by_similarity(
        vectorize_terms(ev.query.terms, files, WeightScheme::kRatio), docs);
    RankedList zero = fuse(ev, Variant::kFull, 0.0);
    ASSERT_EQ(zero.entries.size(), vsm.size());
    for (std::size_t i = 0; i < vsm.size(); ++i) {
      EXPECT_EQ(zero.entries[i].path, files.document(vsm[i].doc_id).path) << p.id;
      EXPECT_EQ(zero.entries[i].score, vsm[i].score);
    }

    std::set<std::string> matched;
    for (const RuleMatch& m : filter_corpus(p.corpus, Builtins()))
      matched.insert(m.path);
    for (double alpha : {0.0, 0.3, 1.0})
      for (const RankedEntry& e : fuse(ev, Variant::kFull, alpha).entries) {
        EXPECT_EQ(e.hf_matched, matched.count(e.path) > 0) << e.path;
        EXPECT_GE(e.score, 0.0);
        EXPECT_LE(e.score, 1.0);
      }
  }
}

TEST(MetricProperties, PrecisionAtOneIsAccuracyAtOne) {
  std::mt19937_64 rng(37);
  for (int round = 0; round < 500; ++round) {
    gen::RankingCase c = gen::ranking_case(rng);
    EXPECT_EQ(precision_at(c.ranked, c.truth, 1), double(accuracy_at(c.ranked, c.truth, 1)));
  }
}

std::string Cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  EXPECT_EQ(run_cli(args, out, err), kExitOk) << err.str();
  return out.str();
}

TEST(CliProperties, JsonAndTsvCarrySameRows) {
  for (const Package& p : Packages()) {
    std::filesystem::path dir = fixtures() / "packages" / p.id;
    std::vector<std::string> args = {"-q", "locate", (dir / "src").string(),
                                     (dir / "diff.log").string(),
                                     (dir / "build.log").string(), "--top", "1000"};
    std::string tsv = Cli(args);
    args.insert(args.end(), {"--format", "json"});
    nlohmann::json json = nlohmann::json::parse(Cli(args));

    std::istringstream lines(tsv);
    std::string line;
    std::getline(lines, line);  // header
    std::size_t row = 0;
    while (std::getline(lines, line)) {
      std::istringstream cells(line);
      std::string rank, score, hf, path;
      std::getline(cells, rank, '\t');
      std::getline(cells, score, '\t');
      std::getline(cells, hf, '\t');
      std::getline(cells, path, '\t');
      ASSERT_LT(row, json["entries"].size());
      const nlohmann::json& e = json["entries"][row++];
      EXPECT_EQ(path, e["path"].get<std::string>());
      EXPECT_EQ(hf == "1", e["hf_matched"].get<bool>());
      EXPECT_NEAR(std::stod(score), e["score"].get<double>(), 1e-12);
    }
    EXPECT_EQ(row, json["entries"].size());
  }
}

TEST(CliProperties, FlagsOverrideConfigOverridesDefaults) {
  testing_paths::ScratchDir dir("precedence");
  dir.write("c.toml", "[locate]\ntop = 2\n");
  std::filesystem::path p = fixtures() / "packages" / "hello";
  std::vector<std::string> base = {"locate", (p / "src").string(), (p / "diff.log").string(),
                                   (p / "build.log").string()};
  auto rows = [](const std::string& out) {
    return std::count(out.begin(), out.end(), '\n') - 1;
  };
  EXPECT_EQ(rows(Cli(base)), 10);
  std::vector<std::string> with_config = {"--config", (dir.path() / "c.toml").string()};
  with_config.insert(with_config.end(), base.begin(), base.end());
  EXPECT_EQ(rows(Cli(with_config)), 2);
  with_config.insert(with_config.end(), {"--top", "3"});
  EXPECT_EQ(rows(Cli(with_config)), 3);
}

}  // namespace
}  // namespace unrepro
