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

#include <boost/regex.hpp>
#include <cstddef>
#include <filesystem>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unrepro/corpus.h"

namespace unrepro {

/// A line-oriented heuristic for a known source of build nondeterminism.
struct Rule {
  int id = 0;             // 1-14 built in, >= 100 user supplied
  std::string name;
  std::string pattern;    // Perl-compatible, applied to single lines
  std::string description;
  /// A substring every matching line contains. Used to skip files and lines
  /// cheaply before running the regex; empty disables the shortcut.
  std::string literal;
};

/// Lowest id accepted for rules loaded from a rules file.
inline constexpr int kFirstUserRuleId = 100;

/// The fourteen built-in rules, ordered by id.
const std::vector<Rule>& builtin_rules();

class CompiledRule {
 public:
  /// Throws InputError if the pattern does not compile.
  explicit CompiledRule(Rule rule);

  const Rule& rule() const { return rule_; }
  /// True iff the pattern matches somewhere in `line` (case-sensitive,
  /// '^' anchors at the line start).
  bool matches(std::string_view line) const;

 private:
  Rule rule_;
  boost::regex regex_;
};

class RuleSet {
 public:
  RuleSet() = default;
  /// Throws InputError on duplicate ids or names, or a bad pattern.
  explicit RuleSet(std::vector<Rule> rules);

  static RuleSet builtin();

  std::span<const CompiledRule> rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }
  const CompiledRule* find(int id) const;
  const CompiledRule* find(std::string_view name) const;

  /// This set plus `extra`, validated together.
  RuleSet with(std::vector<Rule> extra) const;

 private:
  std::vector<CompiledRule> rules_;
};

/// Reads user rules, one JSON object per line:
///   {"id": 100, "name": "...", "pattern": "...", "description": "...",
///    "literal": "..."}
/// "description" and "literal" are optional. Blank lines and lines starting
/// with '#' are skipped. Ids below kFirstUserRuleId are rejected.
std::vector<Rule> load_rules_file(const std::filesystem::path& path);

bool match_line(const CompiledRule& rule, std::string_view line);

struct LineHit {
  int rule_id;
  std::size_t line;  // 1-based

  friend bool operator==(const LineHit&, const LineHit&) = default;
  friend auto operator<=>(const LineHit&, const LineHit&) = default;
};

/// A file matched by at least one rule, with the evidence.
struct RuleMatch {
  std::string path;
  std::set<int> rule_ids;
  std::vector<LineHit> lines;  // by line, then rule id

  friend bool operator==(const RuleMatch&, const RuleMatch&) = default;
};

/// Every (rule, line) hit in `text`, ordered by line then rule id.
std::vector<LineHit> scan_text(std::string_view text, const RuleSet& rules);

/// One RuleMatch per text file with any hit, in path order. Binary files
/// are never scanned.
std::vector<RuleMatch> filter_corpus(const Corpus& corpus, const RuleSet& rules,
                                     unsigned jobs = 0);

}  // namespace unrepro
