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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "unrepro/metrics.h"

namespace unrepro {

/// One package of an evaluation dataset.
struct ManifestEntry {
  std::string id;
  std::filesystem::path source_dir;
  std::filesystem::path diff_log;
  std::filesystem::path build_log;
  TruthSet truth;  // normalized relative paths
};

struct Manifest {
  std::vector<ManifestEntry> entries;
};

/// Reads a JSON Lines manifest, one package per line:
///
///   {"id": "pkg", "source_dir": "pkg/src", "diff_log": "pkg/diff.log",
///    "build_log": "pkg/build.log", "truth": ["debian/rules"]}
///
/// "truth_patch" may name a unified diff instead of (or as well as) listing
/// "truth"; the files it touches are added. Relative paths resolve against
/// the manifest's directory. Blank lines and '#' comments are skipped.
/// Throws InputError for malformed lines, duplicate ids or an unreadable
/// manifest; missing package files are left for evaluation to report.
Manifest load_manifest(const std::filesystem::path& path);

/// Files touched by a unified diff, taken from its ---/+++ headers with the
/// a/ and b/ prefixes removed. /dev/null is ignored.
TruthSet truth_from_patch(std::string_view patch);

}  // namespace unrepro
