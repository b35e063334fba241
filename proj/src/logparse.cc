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

#include "unrepro/logparse.h"

#include <algorithm>
#include <boost/regex.hpp>
#include <unordered_set>

#include "unrepro/errors.h"
#include "unrepro/tokenizer.h"

namespace unrepro {
namespace {

boost::regex Compile(const std::string& pattern, const char* what) {
  try {
    return boost::regex(pattern, boost::regex::perl);
  } catch (const boost::regex_error& e) {
    throw InputError(std::string("invalid ") + what + " regex '" + pattern +
                     "': " + e.what());
  }
}

bool IsAlnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

bool IsAlpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

std::string_view TrimPunct(std::string_view t) {
  constexpr std::string_view kPunct = "'\"`()[]{}<>,;:";
  while (!t.empty() && kPunct.find(t.front()) != std::string_view::npos)
    t.remove_prefix(1);
  while (!t.empty() && kPunct.find(t.back()) != std::string_view::npos)
    t.remove_suffix(1);
  return t;
}

bool Search(std::string_view line, const boost::regex& re, boost::cmatch& m) {
  return boost::regex_search(line.data(), line.data() + line.size(), m, re);
}

}  // namespace

bool is_path_like(std::string_view token) {
  if (token.find('/') != std::string_view::npos)
    return std::any_of(token.begin(), token.end(), IsAlnum);
  std::size_t dot = token.rfind('.');
  if (dot == std::string_view::npos || dot == 0)
    return false;
  std::string_view ext = token.substr(dot + 1);
  if (ext.empty() || ext.size() > 6 || !std::all_of(ext.begin(), ext.end(), IsAlpha))
    return false;
  if (!IsAlnum(token.front()) && token.front() != '_')
    return false;
  return std::all_of(token.begin(), token.end(), [](char c) {
    return IsAlnum(c) || c == '_' || c == '.' || c == '-' || c == '+' || c == '~';
  });
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = text.find('\n', i);
    if (j == std::string_view::npos)
      j = text.size();
    std::string_view line = text.substr(i, j - i);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    lines.push_back(line);
    i = j + 1;
  }
  return lines;
}

BasicQuery BasicQuery::from_file_names(std::vector<std::string> names) {
  BasicQuery q;
  std::unordered_set<std::string> seen;
  for (std::string& name : names) {
    if (!seen.insert(name).second)
      continue;
    for (std::string& t : tokenize(name))
      q.terms.push_back(std::move(t));
    q.file_names.push_back(std::move(name));
  }
  return q;
}

BasicQuery extract_basic_query(std::string_view diff_log,
                               const DiffLogOptions& options) {
  const boost::regex header = Compile(options.header_regex, "diff header");
  std::vector<std::string> names;
  boost::cmatch m;
  for (std::string_view line : split_lines(diff_log)) {
    if (!Search(line, header, m))
      continue;
    const auto& group = m.size() > 1 && m[1].matched ? m[1] : m[0];
    std::string_view text(group.first, static_cast<std::size_t>(group.length()));
    std::size_t i = 0;
    while (i < text.size()) {
      std::size_t j = text.find_first_of(" \t", i);
      if (j == std::string_view::npos)
        j = text.size();
      std::string_view token = TrimPunct(text.substr(i, j - i));
      if (is_path_like(token))
        names.emplace_back(token);
      i = j + 1;
    }
  }
  return BasicQuery::from_file_names(std::move(names));
}

SegmentedLog segment_build_log(std::string_view build_log,
                               const BuildLogOptions& options) {
  const boost::regex enter = Compile(options.enter_regex, "enter-directory");
  const boost::regex leave = Compile(options.leave_regex, "leave-directory");

  SegmentedLog out;
  std::vector<std::size_t> open;
  std::ptrdiff_t top_level = -1;
  auto new_segment = [&](std::string directory) {
    CommandSegment seg;
    seg.segment_id = static_cast<std::uint32_t>(out.segments.size());
    seg.directory = std::move(directory);
    out.segments.push_back(std::move(seg));
    return out.segments.size() - 1;
  };
  auto current = [&]() -> std::size_t {
    if (!open.empty())
      return open.back();
    if (top_level < 0)
      top_level = static_cast<std::ptrdiff_t>(new_segment(""));
    return static_cast<std::size_t>(top_level);
  };
  auto attribute = [&](std::size_t seg, std::string_view line, std::size_t number) {
    CommandSegment& s = out.segments[seg];
    if (!s.lines.empty())
      s.text += '\n';
    s.text += line;
    s.lines.push_back(number);
  };

  boost::cmatch m;
  std::vector<std::string_view> lines = split_lines(build_log);
  out.line_count = lines.size();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (Search(line, enter, m)) {
      std::string dir = m.size() > 1 && m[1].matched ? m[1].str() : std::string();
      std::size_t seg = new_segment(std::move(dir));
      open.push_back(seg);
      attribute(seg, line, i + 1);
    } else if (Search(line, leave, m)) {
      if (open.empty()) {
        out.warnings.push_back("line " + std::to_string(i + 1) +
                               ": leave-directory marker without a matching enter");
        attribute(current(), line, i + 1);
      } else {
        attribute(open.back(), line, i + 1);
        open.pop_back();
      }
    } else {
      attribute(current(), line, i + 1);
    }
  }
  for (CommandSegment& s : out.segments)
    s.term_freqs = count_terms(s.text);
  return out;
}

}  // namespace unrepro
