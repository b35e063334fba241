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

#include "unrepro/cli.h"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "unrepro/corpus.h"
#include "unrepro/errors.h"
#include "unrepro/eval.h"
#include "unrepro/ranker.h"
#include "unrepro/report.h"
#include "unrepro/rules.h"

namespace unrepro {
namespace {

namespace fs = std::filesystem;

struct CliConfig {
  double alpha = kDefaultAlpha;
  std::size_t top_n = 10;
  std::string weighting = "ratio";
  std::size_t augment_top_k = 1;
  std::string format = "tsv";
  std::string rules_file;
  std::string enter_regex{kDefaultEnterRegex};
  std::string leave_regex{kDefaultLeaveRegex};
  std::string diff_header_regex{kDefaultDiffHeaderRegex};
  std::string variant = "full";
  std::uint64_t max_file_bytes = IngestOptions{}.max_file_bytes;
  std::vector<std::string> include;
  std::vector<std::string> exclude;
  bool follow_symlinks = false;
  unsigned jobs = 0;
  bool quiet = false;
  bool verbose = false;
};

std::string ReadText(const std::string& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in || fs::is_directory(path))
    throw InputError(std::string("cannot read ") + what + " " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes via a temporary sibling and rename, so readers never see a
// partial file.
void WriteFileAtomically(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw InputError("cannot write " + tmp.string());
    out << content;
    if (!out)
      throw InputError("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

PipelineConfig MakePipeline(const CliConfig& c) {
  PipelineConfig p;
  p.localize.alpha = c.alpha;
  p.localize.variant = c.variant == "all" ? Variant::kFull : parse_variant(c.variant);
  p.localize.weighting = parse_weight_scheme(c.weighting);
  p.localize.augment_top_k = c.augment_top_k;
  p.localize.diff.header_regex = c.diff_header_regex;
  p.localize.build.enter_regex = c.enter_regex;
  p.localize.build.leave_regex = c.leave_regex;
  p.localize.jobs = c.jobs;
  p.ingest.max_file_bytes = c.max_file_bytes;
  p.ingest.include = c.include;
  p.ingest.exclude = c.exclude;
  p.ingest.follow_symlinks = c.follow_symlinks;
  p.ingest.jobs = c.jobs;
  if (!c.rules_file.empty())
    p.rules = RuleSet::builtin().with(load_rules_file(c.rules_file));
  return p;
}

void Warn(const CliConfig& c, std::ostream& err, const std::vector<std::string>& ws) {
  if (c.quiet)
    return;
  for (const std::string& w : ws)
    err << "warning: " << w << '\n';
}

void AddPipelineFlags(CLI::App* cmd, CliConfig& c) {
  cmd->add_option("--alpha", c.alpha, "weight of the rule-match term, in [0, 1]")
      ->check(CLI::Range(0.0, 1.0))
      ->envname("UNREPRO_ALPHA");
  cmd->add_option("--weighting", c.weighting, "TF-IDF weighting: ratio (tf*N/n) or log-idf")
      ->check(CLI::IsMember({"ratio", "paper", "log-idf"}))
      ->envname("UNREPRO_WEIGHTING");
  cmd->add_option("--augment-top-k", c.augment_top_k,
                  "build-log segments appended to the query")
      ->envname("UNREPRO_AUGMENT_TOP_K");
  cmd->add_option("--rules-file", c.rules_file, "extra rules, one JSON object per line")
      ->envname("UNREPRO_RULES_FILE");
  cmd->add_option("--enter-regex", c.enter_regex, "enter-directory marker regex")
      ->envname("UNREPRO_ENTER_REGEX");
  cmd->add_option("--leave-regex", c.leave_regex, "leave-directory marker regex")
      ->envname("UNREPRO_LEAVE_REGEX");
  cmd->add_option("--diff-header-regex", c.diff_header_regex,
                  "diff report header regex; group 1 holds the header text")
      ->envname("UNREPRO_DIFF_HEADER_REGEX");
  cmd->add_option("--max-file-size", c.max_file_bytes, "skip larger source files (bytes)")
      ->envname("UNREPRO_MAX_FILE_SIZE");
  cmd->add_option("--include", c.include, "only ingest files matching these globs")
      ->envname("UNREPRO_INCLUDE");
  cmd->add_option("--exclude", c.exclude, "skip files matching these globs")
      ->envname("UNREPRO_EXCLUDE");
  cmd->add_flag("--follow-symlinks", c.follow_symlinks, "follow symbolic links")
      ->envname("UNREPRO_FOLLOW_SYMLINKS");
}

int Locate(const CliConfig& c, const std::string& source, const std::string& diff_path,
           const std::string& build_path, std::ostream& out, std::ostream& err) {
  PipelineConfig p = MakePipeline(c);
  std::string diff = ReadText(diff_path, "diff log");
  std::string build = ReadText(build_path, "build log");
  Corpus corpus = ingest_tree(source, p.ingest);
  Warn(c, err, corpus.warnings());
  if (c.verbose) {
    const IngestStats& s = corpus.stats();
    err << "ingested " << s.text_files << " text files (" << s.binary_files
        << " binary, " << s.skipped_too_large << " too large, "
        << s.skipped_unreadable << " unreadable), " << s.total_tokens << " tokens\n";
  }
  RankedList list = localize(corpus, diff, build, p.localize, p.rules);
  Warn(c, err, list.warnings);
  if (c.format == "json")
    out << render_ranked_json(list, p.rules, c.top_n, &corpus);
  else
    out << render_ranked_tsv(list, p.rules, c.top_n);
  return kExitOk;
}

int Eval(const CliConfig& c, const std::string& manifest_path, const std::string& out_dir,
         std::ostream& out, std::ostream& err) {
  PipelineConfig p = MakePipeline(c);
  Manifest manifest = load_manifest(manifest_path);
  std::vector<Variant> variants;
  if (c.variant == "all")
    variants = {Variant::kHeuristicOnly, Variant::kRankingOnly,
                Variant::kRankingWithAugmentation, Variant::kFull};
  else
    variants = {parse_variant(c.variant)};
  std::vector<EvalReport> reports = evaluate_variants(manifest, p, variants);
  Warn(c, err, reports.front().warnings);

  std::string tsv = render_eval_tsv(reports);
  std::string json = render_eval_json(reports);
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    WriteFileAtomically(fs::path(out_dir) / "eval.tsv", tsv);
    WriteFileAtomically(fs::path(out_dir) / "eval.json", json);
  }
  out << (c.format == "json" ? json : tsv);
  if (!manifest.entries.empty() && reports.front().n_packages == 0) {
    err << "error: every package failed to evaluate\n";
    return kExitBadInput;
  }
  return kExitOk;
}

int Sweep(const CliConfig& c, const std::string& manifest_path,
          std::vector<double> alphas, const std::string& out_file, std::ostream& out,
          std::ostream& err) {
  PipelineConfig p = MakePipeline(c);
  Manifest manifest = load_manifest(manifest_path);
  if (alphas.empty())
    alphas = default_alpha_grid();
  PreparedDataset dataset = prepare_dataset(manifest, p);
  Warn(c, err, dataset.warnings);
  std::string tsv = render_sweep_tsv(alpha_sweep(dataset, alphas));
  if (!out_file.empty())
    WriteFileAtomically(out_file, tsv);
  out << tsv;
  if (!manifest.entries.empty() && dataset.packages.empty()) {
    err << "error: every package failed to evaluate\n";
    return kExitBadInput;
  }
  return kExitOk;
}

int RulesCheck(const CliConfig& c, const std::string& target, std::ostream& out,
               std::ostream& err) {
  RuleSet rules = MakePipeline(c).rules;
  std::error_code ec;
  if (fs::is_directory(target, ec)) {
    IngestOptions opts;
    opts.jobs = c.jobs;
    Corpus corpus = ingest_tree(target, opts);
    Warn(c, err, corpus.warnings());
    for (const RuleMatch& m : filter_corpus(corpus, rules, c.jobs))
      for (const SourceFile& f : corpus.files())
        if (f.path == m.path)
          out << render_rule_hits(f.path, f.bytes, rules);
    return kExitOk;
  }
  std::string text = ReadText(target, "file");
  if (looks_binary(text))
    return kExitOk;
  out << render_rule_hits(target, text, rules);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank the source files most likely to make a package build unreproducible"};
  app.name("unrepro");
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file with option defaults");

  CliConfig c;
  app.add_option("-j,--jobs", c.jobs, "worker threads (0: one per core)")
      ->envname("UNREPRO_JOBS");
  app.add_flag("-q,--quiet", c.quiet, "suppress warnings");
  app.add_flag("-v,--verbose", c.verbose, "report ingestion statistics");

  std::string source, diff_log, build_log, manifest, out_dir, out_file, rules_target;
  std::vector<double> alphas;

  CLI::App* locate = app.add_subcommand("locate", "rank the files of one package");
  locate->add_option("source_dir", source, "package source tree")->required();
  locate->add_option("diff_log", diff_log, "binary diff report")->required();
  locate->add_option("build_log", build_log, "build log")->required();
  AddPipelineFlags(locate, c);
  locate->add_option("--top", c.top_n, "rows to print")
      ->check(CLI::PositiveNumber)
      ->envname("UNREPRO_TOP");
  locate->add_option("--format", c.format, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->envname("UNREPRO_FORMAT");
  locate->add_option("--variant", c.variant, "hf, fr, fr+qa or full")
      ->check(CLI::IsMember({"hf", "fr", "fr+qa", "full"}))
      ->envname("UNREPRO_VARIANT");

  CLI::App* eval = app.add_subcommand("eval", "score a dataset manifest");
  eval->add_option("manifest", manifest, "JSON Lines manifest")->required();
  AddPipelineFlags(eval, c);
  eval->add_option("--variant", c.variant, "hf, fr, fr+qa, full or all")
      ->check(CLI::IsMember({"hf", "fr", "fr+qa", "full", "all"}))
      ->envname("UNREPRO_VARIANT");
  eval->add_option("--format", c.format, "stdout format: tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->envname("UNREPRO_FORMAT");
  eval->add_option("--out-dir", out_dir, "also write eval.tsv and eval.json here");

  CLI::App* sweep = app.add_subcommand("sweep", "evaluate the full pipeline over alpha values");
  sweep->add_option("manifest", manifest, "JSON Lines manifest")->required();
  AddPipelineFlags(sweep, c);
  sweep->add_option("--alphas", alphas, "comma-separated alphas (default 0.1..0.9)")
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--out", out_file, "also write the table to this file");

  CLI::App* rules = app.add_subcommand("rules", "inspect the heuristic rules");
  rules->require_subcommand(1);
  rules->add_option("--rules-file", c.rules_file, "extra rules, one JSON object per line")
      ->envname("UNREPRO_RULES_FILE");
  CLI::App* rules_list = rules->add_subcommand("list", "print the rule table");
  CLI::App* rules_check = rules->add_subcommand("check", "print the rule hits of a file or tree");
  rules_check->add_option("path", rules_target, "file or directory")->required();
  // --rules-file is accepted after either subcommand as well.
  rules_list->fallthrough();
  rules_check->fallthrough();

  std::vector<const char*> argv{"unrepro"};
  for (const std::string& a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*locate)
      return Locate(c, source, diff_log, build_log, out, err);
    if (*eval)
      return Eval(c, manifest, out_dir, out, err);
    if (*sweep)
      return Sweep(c, manifest, alphas, out_file, out, err);
    if (*rules_list) {
      out << render_rules_table(MakePipeline(c).rules);
      return kExitOk;
    }
    if (*rules_check)
      return RulesCheck(c, rules_target, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
  return kExitInternalError;
}

}  // namespace unrepro
