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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace unrepro {

using TermId = std::uint32_t;

/// A file of a package's source tree.
struct SourceFile {
  std::string path;  // relative, '/'-separated, no "." or ".." components
  std::string bytes;
  bool is_text = true;
  friend bool operator==(const SourceFile&, const SourceFile&) = default;
};

struct TermCount {
  TermId term;
  std::uint32_t count;

  friend bool operator==(const TermCount&, const TermCount&) = default;
};

struct Document {
  std::uint32_t doc_id = 0;
  std::string path;
  std::vector<TermCount> term_freqs;  // sorted by term id, counts >= 1
  std::uint64_t length = 0;           // sum of counts

  friend bool operator==(const Document&, const Document&) = default;
};

class Vocabulary {
 public:
  TermId intern(std::string_view term);
  std::optional<TermId> find(std::string_view term) const;
  const std::string& term(TermId id) const { return terms_[id]; }
  std::size_t size() const { return terms_.size(); }

  bool operator==(const Vocabulary& other) const { return terms_ == other.terms_; }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };
  std::unordered_map<std::string, TermId, Hash, std::equal_to<>> ids_;
  std::vector<std::string> terms_;
};

/// Term counts for one document, sorted by term.
using TermCounts = std::vector<std::pair<std::string, std::uint32_t>>;

/// Counts the terms of `text` (via tokenize).
TermCounts count_terms(std::string_view text);

/// A document collection with the statistics TF-IDF weighting needs:
/// per-term document frequency n_t and the collection size N.
class Collection {
 public:
  /// Appends a document. Its doc_id is the previous size().
  std::uint32_t add(std::string path, const TermCounts& counts);

  /// One document per (path, text) pair, in the given order.
  static Collection from_texts(
      std::span<const std::pair<std::string, std::string>> docs);

  const Vocabulary& vocabulary() const { return vocab_; }
  std::span<const Document> documents() const { return docs_; }
  const Document& document(std::uint32_t doc_id) const { return docs_[doc_id]; }
  std::size_t size() const { return docs_.size(); }

  std::uint32_t df(TermId term) const { return df_[term]; }
  /// 0 when the term never occurs.
  std::uint32_t df(std::string_view term) const;
  std::span<const std::uint32_t> df_table() const { return df_; }

  /// f_{t,d}; 0 when absent.
  std::uint32_t term_freq(std::uint32_t doc_id, std::string_view term) const;

  bool operator==(const Collection&) const = default;

 private:
  Vocabulary vocab_;
  std::vector<Document> docs_;
  std::vector<std::uint32_t> df_;
};

struct IngestOptions {
  std::uint64_t max_file_bytes = 8ull << 20;
  std::vector<std::string> include;  // globs; empty means everything
  std::vector<std::string> exclude;
  bool follow_symlinks = false;
  unsigned jobs = 0;  // 0: one per hardware thread
};

struct IngestStats {
  std::size_t files_seen = 0;  // regular files considered after filters
  std::size_t text_files = 0;
  std::size_t binary_files = 0;
  std::size_t skipped_too_large = 0;
  std::size_t skipped_unreadable = 0;
  std::size_t skipped_symlinks = 0;
  std::size_t filtered_out = 0;
  std::uint64_t total_tokens = 0;

  bool operator==(const IngestStats&) const = default;
};

/// A package's source tree: every ingested file (text and binary), and a
/// Collection with one Document per text file. Documents and files are in
/// lexicographic path order, so doc ids are stable across ingestions.
class Corpus {
 public:
  Corpus() = default;

  /// Builds a corpus from in-memory files. Paths are validated and sorted;
  /// binary classification is recomputed from the bytes.
  static Corpus from_files(std::vector<SourceFile> files, unsigned jobs = 0);

  const Collection& collection() const { return collection_; }
  std::span<const SourceFile> files() const { return files_; }
  std::size_t n_docs() const { return collection_.size(); }
  const Document& document(std::uint32_t doc_id) const {
    return collection_.document(doc_id);
  }
  /// The source file behind a document.
  const SourceFile& file_of(std::uint32_t doc_id) const {
    return files_[doc_files_[doc_id]];
  }

  const IngestStats& stats() const { return stats_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  bool operator==(const Corpus&) const = default;

 private:
  friend Corpus ingest_tree(const std::filesystem::path&, const IngestOptions&);
  static Corpus build(std::vector<SourceFile> files, unsigned jobs,
                      IngestStats stats, std::vector<std::string> warnings);

  Collection collection_;
  std::vector<SourceFile> files_;
  std::vector<std::size_t> doc_files_;
  IngestStats stats_;
  std::vector<std::string> warnings_;
};

/// Reads every regular file under `root`. Symlinks are skipped unless
/// options.follow_symlinks; oversized and unreadable files are skipped with a
/// warning. Throws InputError if root is missing or not a directory.
Corpus ingest_tree(const std::filesystem::path& root,
                   const IngestOptions& options = {});

/// A NUL byte within the first 8192 bytes.
bool looks_binary(std::string_view bytes);

/// Canonical relative form: '/' separators, no leading "./" or "/", no
/// empty or "." components. Throws InputError on "..".
std::string normalize_relative_path(std::string_view path);

/// Shell-style glob match against the whole relative path or its basename.
bool glob_matches(std::string_view pattern, std::string_view path);

}  // namespace unrepro
