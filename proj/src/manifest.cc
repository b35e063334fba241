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

#include "unrepro/manifest.h"

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <unordered_set>

#include "unrepro/corpus.h"
#include "unrepro/errors.h"
#include "unrepro/logparse.h"

namespace unrepro {

namespace fs = std::filesystem;

TruthSet truth_from_patch(std::string_view patch) {
  TruthSet out;
  for (std::string_view line : split_lines(patch)) {
    if (line.size() < 4 || !(line.starts_with("--- ") || line.starts_with("+++ ")))
      continue;
    std::string_view path = line.substr(4);
    std::size_t tab = path.find('\t');
    if (tab != std::string_view::npos)
      path = path.substr(0, tab);
    while (!path.empty() && (path.back() == ' ' || path.back() == '\r'))
      path.remove_suffix(1);
    if (path.empty() || path == "/dev/null")
      continue;
    if (path.starts_with("a/") || path.starts_with("b/"))
      path.remove_prefix(2);
    std::string norm = normalize_relative_path(path);
    if (!norm.empty())
      out.insert(std::move(norm));
  }
  return out;
}

Manifest load_manifest(const fs::path& path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot read manifest " + path.string());
  const fs::path base = path.parent_path();
  auto resolve = [&](const std::string& p) {
    fs::path q(p);
    return q.is_absolute() ? q : base / q;
  };

  Manifest manifest;
  std::unordered_set<std::string> ids;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#')
      continue;
    const std::string where = path.string() + ":" + std::to_string(number);
    try {
      nlohmann::json j = nlohmann::json::parse(line);
      ManifestEntry e;
      e.id = j.at("id").get<std::string>();
      e.source_dir = resolve(j.at("source_dir").get<std::string>());
      e.diff_log = resolve(j.at("diff_log").get<std::string>());
      e.build_log = resolve(j.at("build_log").get<std::string>());
      if (j.contains("truth"))
        for (const auto& t : j.at("truth"))
          e.truth.insert(normalize_relative_path(t.get<std::string>()));
      if (j.contains("truth_patch")) {
        std::ifstream patch(resolve(j.at("truth_patch").get<std::string>()));
        if (patch) {
          std::stringstream ss;
          ss << patch.rdbuf();
          e.truth.merge(truth_from_patch(ss.str()));
        }
      }
      if (!ids.insert(e.id).second)
        throw InputError(where + ": duplicate package id " + e.id);
      manifest.entries.push_back(std::move(e));
    } catch (const nlohmann::json::exception& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  return manifest;
}

}  // namespace unrepro
