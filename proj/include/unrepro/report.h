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
#include <span>
#include <string>
#include <string_view>

#include "unrepro/corpus.h"
#include "unrepro/eval.h"
#include "unrepro/ranker.h"
#include "unrepro/rules.h"

namespace unrepro {

/// Fixed four decimals, the precision of every rendered score.
std::string format_score(double value);

/// Header plus one row per entry (at most `top`):
///   rank  score  hf  path  evidence
/// evidence is "RULE_NAME:line,..." or "-".
std::string render_ranked_tsv(const RankedList& list, const RuleSet& rules,
                              std::size_t top);

/// The same rows as render_ranked_tsv, scores rounded identically. When
/// `corpus` is given, evidence items carry the matched line's text.
std::string render_ranked_json(const RankedList& list, const RuleSet& rules,
                               std::size_t top, const Corpus* corpus = nullptr);

/// One row per (variant, package) and a MEAN row per variant whose AP
/// column is the MAP.
std::string render_eval_tsv(std::span<const EvalReport> reports);
std::string render_eval_json(std::span<const EvalReport> reports);

std::string render_sweep_tsv(std::span<const SweepRow> rows);

/// id, name, pattern and description of every rule.
std::string render_rules_table(const RuleSet& rules);

/// "path:line:RULE_NAME:text" for every hit of `rules` in `text`.
std::string render_rule_hits(std::string_view path, std::string_view text,
                             const RuleSet& rules);

}  // namespace unrepro
