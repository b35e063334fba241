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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "unrepro/corpus.h"

namespace unrepro {

/// Section headers of a diffoscope-style report: "--- a", "+++ b" and the
/// "├── member" lines, possibly indented by "│" nesting bars. Capture group 1
/// is the header text scanned for paths.
inline constexpr std::string_view kDefaultDiffHeaderRegex =
    R"(^(?:│|\s)*(?:├──|---|\+\+\+)\s+(.+)$)";

/// GNU make's directory markers; group 1 is the directory. Accepts the
/// `dir', 'dir' and ‘dir’ quoting styles.
inline constexpr std::string_view kDefaultEnterRegex =
    R"(Entering directory\s+(?:[`'"]|‘)(.*?)(?:['"]|’)\s*$)";
inline constexpr std::string_view kDefaultLeaveRegex =
    R"(Leaving directory\s+(?:[`'"]|‘)(.*?)(?:['"]|’)\s*$)";

struct DiffLogOptions {
  std::string header_regex{kDefaultDiffHeaderRegex};
};

struct BuildLogOptions {
  std::string enter_regex{kDefaultEnterRegex};
  std::string leave_regex{kDefaultLeaveRegex};
};

/// The file names mentioned by a binary diff report.
struct BasicQuery {
  std::vector<std::string> file_names;  // first-occurrence order, unique
  std::vector<std::string> terms;       // tokenize(name) concatenated

  static BasicQuery from_file_names(std::vector<std::string> names);
};

/// The build commands run under one directory of the build log.
struct CommandSegment {
  std::uint32_t segment_id = 0;
  std::string directory;             // empty for the top level
  std::string text;                  // attributed lines joined by '\n'
  std::vector<std::size_t> lines;    // 1-based line numbers, ascending
  TermCounts term_freqs;             // count_terms(text)
};

struct SegmentedLog {
  std::vector<CommandSegment> segments;
  std::size_t line_count = 0;
  std::vector<std::string> warnings;
};

/// Collects every path-like token on the report's header lines. Hunk
/// bodies never contribute. Throws InputError if the regex is invalid.
BasicQuery extract_basic_query(std::string_view diff_log,
                               const DiffLogOptions& options = {});

/// Splits a build log into command segments. Each enter marker opens a
/// fresh segment that owns the lines up to its matching leave marker
/// (inclusive); nested markers attribute lines to the innermost open
/// segment. Lines outside every marker pair form one top-level segment,
/// created when its first line appears. An empty log gives no segments.
/// Unclosed segments end at EOF; a stray leave marker stays in the current
/// segment and produces a warning.
SegmentedLog segment_build_log(std::string_view build_log,
                               const BuildLogOptions& options = {});

/// A token that names a file: it contains '/' (and some alphanumeric), or
/// looks like name.ext with a 1-6 letter extension.
bool is_path_like(std::string_view token);

/// Splits on '\n', dropping one trailing '\r' per line. A final newline does
/// not start an extra empty line.
std::vector<std::string_view> split_lines(std::string_view text);

}  // namespace unrepro
