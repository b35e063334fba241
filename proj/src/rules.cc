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

#include "unrepro/rules.h"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <unordered_set>

#include "unrepro/errors.h"
#include "unrepro/logparse.h"
#include "unrepro/parallel.h"
#include "unrepro/simd/kernels.h"

namespace unrepro {

const std::vector<Rule>& builtin_rules() {
  // Patterns are kept byte-for-byte stable: published results depend on
  // them. SORT_IN_PIPE has no backtick after the pipe. LS_WITHOUT_LOCALE
  // keeps its lookahead after a greedy ".*", which lets it match even when
  // LC_ALL= precedes ls.
  static const std::vector<Rule> rules = {
      {1, "TIME_MACRO", R"(__TIME__)",
       "C time preprocessing macro embeds the build time", "__TIME__"},
      {2, "DATE_MACRO", R"(__DATE__)",
       "C date preprocessing macro embeds the build date", "__DATE__"},
      {3, "GZIP_ARG", R"(\bgzip\s(?!.*-[a-z9]*n))",
       "gzip without -n stores a timestamp in the header", "gzip"},
      {4, "DATE_CMD", R"((\$\(date)|(\$\(shell\s*date)|(`date))",
       "current date captured with the date command", "date"},
      {5, "PY_DATE", R"(datetime\.datetime\.today)",
       "current date obtained in a Python script", "datetime.datetime.today"},
      {6, "PL_LOCALTIME", R"(\$.*localtime)",
       "current time obtained in a Perl script", "localtime"},
      {7, "SYSTEM_DATE", R"(system.*date)",
       "system time recorded into the build output", "system"},
      {8, "DATE_IN_TEX", R"(\\date.*\\today)",
       "date embedded in a TeX document", "\\today"},
      {9, "SORT_IN_PIPE", R"(^.*\|(?!.*LC_ALL=).*\s*sort\b)",
       "sort in a pipeline without a locale setting", "sort"},
      {10, "GMTIME", R"(gmtime\()", "current date and time obtained", "gmtime("},
      {11, "TAR_GZIP_PIPE", R"(\btar\b.*\|\s*\bgzip\b)",
       "tar piped into gzip", "gzip"},
      {12, "PL_UNSORTED_KEY", R"((^(?!.*sort).*\s*keys\s*%))",
       "Perl hash keys traversed without sorting", "keys"},
      {13, "LS_WITHOUT_LOCALE", R"(^.*\$\(.*(?!.*LC_ALL=).*\s*\bls\b)",
       "ls output captured without a locale setting", "ls"},
      {14, "UNSORTED_WILDCARD", R"((^(?!.*sort).*\s*\bwildcard\b))",
       "make wildcard used without sort", "wildcard"},
  };
  return rules;
}

CompiledRule::CompiledRule(Rule rule) : rule_(std::move(rule)) {
  try {
    regex_.assign(rule_.pattern, boost::regex::perl);
  } catch (const boost::regex_error& e) {
    throw InputError("rule " + rule_.name + ": invalid pattern '" + rule_.pattern +
                     "': " + e.what());
  }
}

bool CompiledRule::matches(std::string_view line) const {
  return boost::regex_search(line.data(), line.data() + line.size(), regex_,
                             boost::match_default | boost::match_not_dot_newline);
}

bool match_line(const CompiledRule& rule, std::string_view line) {
  return rule.matches(line);
}

RuleSet::RuleSet(std::vector<Rule> rules) {
  std::unordered_set<int> ids;
  std::unordered_set<std::string> names;
  for (Rule& r : rules) {
    if (r.name.empty())
      throw InputError("rule " + std::to_string(r.id) + " has no name");
    if (!ids.insert(r.id).second)
      throw InputError("duplicate rule id " + std::to_string(r.id));
    if (!names.insert(r.name).second)
      throw InputError("duplicate rule name " + r.name);
    rules_.emplace_back(std::move(r));
  }
}

RuleSet RuleSet::builtin() { return RuleSet(builtin_rules()); }

const CompiledRule* RuleSet::find(int id) const {
  for (const CompiledRule& r : rules_)
    if (r.rule().id == id)
      return &r;
  return nullptr;
}

const CompiledRule* RuleSet::find(std::string_view name) const {
  for (const CompiledRule& r : rules_)
    if (r.rule().name == name)
      return &r;
  return nullptr;
}

RuleSet RuleSet::with(std::vector<Rule> extra) const {
  std::vector<Rule> all;
  for (const CompiledRule& r : rules_)
    all.push_back(r.rule());
  for (Rule& r : extra)
    all.push_back(std::move(r));
  return RuleSet(std::move(all));
}

std::vector<Rule> load_rules_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot read rules file " + path.string());
  std::vector<Rule> rules;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#')
      continue;
    const std::string where = path.string() + ":" + std::to_string(number);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
      Rule r;
      r.id = j.at("id").get<int>();
      r.name = j.at("name").get<std::string>();
      r.pattern = j.at("pattern").get<std::string>();
      r.description = j.value("description", std::string());
      r.literal = j.value("literal", std::string());
      if (r.id < kFirstUserRuleId)
        throw InputError(where + ": user rule ids start at " +
                         std::to_string(kFirstUserRuleId));
      rules.push_back(std::move(r));
    } catch (const nlohmann::json::exception& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  return rules;
}

std::vector<LineHit> scan_text(std::string_view text, const RuleSet& rules) {
  const simd::KernelTable& k = simd::active_kernels();
  auto contains = [&](std::string_view hay, const std::string& lit) {
    return lit.empty() ||
           k.find_substring(hay.data(), hay.size(), lit.data(), lit.size()) != hay.size();
  };

  std::vector<const CompiledRule*> candidates;
  for (const CompiledRule& r : rules.rules())
    if (contains(text, r.rule().literal))
      candidates.push_back(&r);
  std::sort(candidates.begin(), candidates.end(),
            [](const CompiledRule* a, const CompiledRule* b) {
              return a->rule().id < b->rule().id;
            });

  std::vector<LineHit> hits;
  if (candidates.empty())
    return hits;
  std::vector<std::string_view> lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (const CompiledRule* r : candidates)
      if (contains(lines[i], r->rule().literal) && r->matches(lines[i]))
        hits.push_back({r->rule().id, i + 1});
  return hits;
}

std::vector<RuleMatch> filter_corpus(const Corpus& corpus, const RuleSet& rules,
                                     unsigned jobs) {
  std::vector<std::vector<LineHit>> per_doc(corpus.n_docs());
  parallel_for(corpus.n_docs(), jobs, [&](std::size_t i) {
    per_doc[i] = scan_text(corpus.file_of(static_cast<std::uint32_t>(i)).bytes, rules);
  });
  std::vector<RuleMatch> out;
  for (std::size_t i = 0; i < per_doc.size(); ++i) {
    if (per_doc[i].empty())
      continue;
    RuleMatch m;
    m.path = corpus.document(static_cast<std::uint32_t>(i)).path;
    for (const LineHit& h : per_doc[i])
      m.rule_ids.insert(h.rule_id);
    m.lines = std::move(per_doc[i]);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace unrepro
