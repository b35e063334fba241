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

#include "unrepro/corpus.h"

#include <fnmatch.h>

#include <algorithm>
#include <cstdio>
#include <system_error>

#include "unrepro/errors.h"
#include "unrepro/parallel.h"
#include "unrepro/simd/kernels.h"
#include "unrepro/tokenizer.h"

namespace unrepro {

namespace fs = std::filesystem;

TermId Vocabulary::intern(std::string_view term) {
  auto it = ids_.find(term);
  if (it != ids_.end())
    return it->second;
  TermId id = static_cast<TermId>(terms_.size());
  terms_.emplace_back(term);
  ids_.emplace(terms_.back(), id);
  return id;
}

std::optional<TermId> Vocabulary::find(std::string_view term) const {
  auto it = ids_.find(term);
  if (it == ids_.end())
    return std::nullopt;
  return it->second;
}

namespace {

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const {
    return std::hash<std::string_view>{}(s);
  }
};

}  // namespace

TermCounts count_terms(std::string_view text) {
  std::unordered_map<std::string, std::uint32_t, StringHash, std::equal_to<>> counts;
  for_each_token(text, [&](std::string_view t) {
    auto it = counts.find(t);
    if (it == counts.end())
      counts.emplace(std::string(t), 1);
    else
      ++it->second;
  });
  TermCounts out(counts.begin(), counts.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::uint32_t Collection::add(std::string path, const TermCounts& counts) {
  Document doc;
  doc.doc_id = static_cast<std::uint32_t>(docs_.size());
  doc.path = std::move(path);
  doc.term_freqs.reserve(counts.size());
  for (const auto& [term, count] : counts) {
    if (count == 0)
      continue;
    TermId id = vocab_.intern(term);
    if (id >= df_.size())
      df_.resize(id + 1, 0);
    ++df_[id];
    doc.term_freqs.push_back({id, count});
    doc.length += count;
  }
  std::sort(doc.term_freqs.begin(), doc.term_freqs.end(),
            [](const TermCount& a, const TermCount& b) { return a.term < b.term; });
  docs_.push_back(std::move(doc));
  return docs_.back().doc_id;
}

Collection Collection::from_texts(
    std::span<const std::pair<std::string, std::string>> docs) {
  Collection c;
  for (const auto& [path, text] : docs)
    c.add(path, count_terms(text));
  return c;
}

std::uint32_t Collection::df(std::string_view term) const {
  auto id = vocab_.find(term);
  return id ? df_[*id] : 0;
}

std::uint32_t Collection::term_freq(std::uint32_t doc_id,
                                    std::string_view term) const {
  auto id = vocab_.find(term);
  if (!id)
    return 0;
  const auto& tf = docs_[doc_id].term_freqs;
  auto it = std::lower_bound(tf.begin(), tf.end(), *id,
                             [](const TermCount& c, TermId t) { return c.term < t; });
  return (it != tf.end() && it->term == *id) ? it->count : 0;
}

bool looks_binary(std::string_view bytes) {
  std::size_t n = std::min<std::size_t>(bytes.size(), 8192);
  return simd::active_kernels().find_byte(bytes.data(), n, '\0') != n;
}

std::string normalize_relative_path(std::string_view path) {
  std::string out;
  std::size_t i = 0;
  while (i <= path.size()) {
    std::size_t j = path.find_first_of("/\\", i);
    if (j == std::string_view::npos)
      j = path.size();
    std::string_view part = path.substr(i, j - i);
    if (part == "..")
      throw InputError("path escapes its root: " + std::string(path));
    if (!part.empty() && part != ".") {
      if (!out.empty())
        out += '/';
      out += part;
    }
    i = j + 1;
  }
  return out;
}

bool glob_matches(std::string_view pattern, std::string_view path) {
  std::string pat(pattern), p(path);
  if (::fnmatch(pat.c_str(), p.c_str(), 0) == 0)
    return true;
  std::size_t slash = p.rfind('/');
  return slash != std::string::npos &&
         ::fnmatch(pat.c_str(), p.c_str() + slash + 1, 0) == 0;
}

Corpus Corpus::build(std::vector<SourceFile> files, unsigned jobs,
                     IngestStats stats, std::vector<std::string> warnings) {
  std::sort(files.begin(), files.end(),
            [](const SourceFile& a, const SourceFile& b) { return a.path < b.path; });
  for (std::size_t i = 1; i < files.size(); ++i)
    if (files[i].path == files[i - 1].path)
      throw InputError("duplicate path in corpus: " + files[i].path);

  std::vector<TermCounts> counts(files.size());
  parallel_for(files.size(), jobs, [&](std::size_t i) {
    files[i].is_text = !looks_binary(files[i].bytes);
    if (files[i].is_text)
      counts[i] = count_terms(files[i].bytes);
  });

  Corpus corpus;
  stats.text_files = 0;
  stats.binary_files = 0;
  stats.total_tokens = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (!files[i].is_text) {
      ++stats.binary_files;
      continue;
    }
    ++stats.text_files;
    std::uint32_t id = corpus.collection_.add(files[i].path, counts[i]);
    stats.total_tokens += corpus.collection_.document(id).length;
    corpus.doc_files_.push_back(i);
  }
  corpus.files_ = std::move(files);
  corpus.stats_ = stats;
  corpus.warnings_ = std::move(warnings);
  return corpus;
}

Corpus Corpus::from_files(std::vector<SourceFile> files, unsigned jobs) {
  for (SourceFile& f : files) {
    std::string norm = normalize_relative_path(f.path);
    if (norm.empty())
      throw InputError("empty path in corpus");
    f.path = std::move(norm);
  }
  IngestStats stats;
  stats.files_seen = files.size();
  return build(std::move(files), jobs, stats, {});
}

namespace {

bool ReadFile(const fs::path& path, std::string& out) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f)
    return false;
  out.clear();
  char buf[1 << 16];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, f)) > 0)
    out.append(buf, got);
  bool ok = !std::ferror(f);
  std::fclose(f);
  return ok;
}

}  // namespace

Corpus ingest_tree(const fs::path& root, const IngestOptions& options) {
  std::error_code ec;
  if (!fs::is_directory(root, ec))
    throw InputError("source tree is not a readable directory: " + root.string());

  auto dir_options = fs::directory_options::skip_permission_denied;
  if (options.follow_symlinks)
    dir_options |= fs::directory_options::follow_directory_symlink;
  fs::recursive_directory_iterator it(root, dir_options, ec);
  if (ec)
    throw InputError("cannot read source tree " + root.string() + ": " + ec.message());

  IngestStats stats;
  std::vector<std::string> warnings;
  std::vector<std::pair<std::string, fs::path>> candidates;
  for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (ec) {
      warnings.push_back("cannot walk " + root.string() + ": " + ec.message());
      break;
    }
    const fs::directory_entry& entry = *it;
    std::error_code entry_ec;
    if (entry.is_symlink(entry_ec) && !options.follow_symlinks) {
      ++stats.skipped_symlinks;
      continue;
    }
    if (!entry.is_regular_file(entry_ec))
      continue;
    std::string rel = normalize_relative_path(
        entry.path().lexically_relative(root).generic_string());
    bool keep = options.include.empty();
    for (const std::string& g : options.include)
      keep = keep || glob_matches(g, rel);
    for (const std::string& g : options.exclude)
      keep = keep && !glob_matches(g, rel);
    if (!keep) {
      ++stats.filtered_out;
      continue;
    }
    ++stats.files_seen;
    std::uintmax_t size = entry.file_size(entry_ec);
    if (!entry_ec && size > options.max_file_bytes) {
      ++stats.skipped_too_large;
      warnings.push_back("skipping " + rel + ": " + std::to_string(size) +
                         " bytes exceeds the size cap");
      continue;
    }
    candidates.emplace_back(std::move(rel), entry.path());
  }
  std::sort(candidates.begin(), candidates.end());

  std::vector<SourceFile> files(candidates.size());
  std::vector<char> readable(candidates.size(), 0);
  parallel_for(candidates.size(), options.jobs, [&](std::size_t i) {
    files[i].path = candidates[i].first;
    readable[i] = ReadFile(candidates[i].second, files[i].bytes);
  });
  std::vector<SourceFile> kept;
  kept.reserve(files.size());
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (!readable[i]) {
      ++stats.skipped_unreadable;
      warnings.push_back("skipping unreadable file " + files[i].path);
      continue;
    }
    kept.push_back(std::move(files[i]));
  }
  return Corpus::build(std::move(kept), options.jobs, stats, std::move(warnings));
}

}  // namespace unrepro
