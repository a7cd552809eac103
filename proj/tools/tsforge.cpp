// Copyright 2026 The tsforge Authors
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

// tsforge: turns parallel corpora, pseudo-parallel corpora and
// (source, MT, reference) triplets into translation-suggestion training
// data, and scores suggestion outputs with corpus BLEU.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tsforge/alignment.hpp"
#include "tsforge/augment.hpp"
#include "tsforge/bleu.hpp"
#include "tsforge/corpus_io.hpp"
#include "tsforge/dual_ce.hpp"
#include "tsforge/errors.hpp"
#include "tsforge/filters.hpp"
#include "tsforge/log.hpp"
#include "tsforge/ngram_lm.hpp"
#include "tsforge/phrase_align.hpp"
#include "tsforge/ts_example.hpp"

namespace fs = std::filesystem;
using namespace tsforge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

// ---------------------------------------------------------------------------
// Flat key=value config files. '#' starts a comment; values keep inner
// whitespace; relative paths resolve against the config file's directory.

using ConfigMap = std::map<std::string, std::string>;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

ConfigMap load_config(const std::string& path) {
  LineReader reader(path);
  ConfigMap cfg;
  std::string line;
  const fs::path base = fs::path(path).parent_path();
  const bool resolve = path != "-";
  static const char* kPathKeys[] = {"golden_input",      "pseudo_input",
                                    "triplet_input",     "alignment_input",
                                    "output",            "stats_output",
                                    "lex_forward",       "lex_backward",
                                    "corpus_lex_forward", "corpus_lex_backward",
                                    "lm_file",           "lm_train_file"};
  while (reader.next(line)) {
    const std::string stripped = trim(line.substr(0, line.find('#')));
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ": line " + std::to_string(reader.line_no()) +
                        ": expected key=value, got \"" + stripped + "\"");
    }
    const std::string key = trim(stripped.substr(0, eq));
    std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError(path + ": line " + std::to_string(reader.line_no()) + ": empty key");
    }
    const bool is_path = std::find(std::begin(kPathKeys), std::end(kPathKeys), key) !=
                         std::end(kPathKeys);
    if (resolve && is_path && !value.empty() && value != "-" &&
        !fs::path(value).is_absolute()) {
      value = (base / value).string();
    }
    cfg[key] = value;
  }
  return cfg;
}

std::uint64_t to_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key " + key + ": expected an unsigned integer, got \"" +
                      value + "\"");
  }
}

double to_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key " + key + ": expected a number, got \"" + value + "\"");
  }
}

bool to_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("config key " + key + ": expected true/false, got \"" + value + "\"");
}

// ---------------------------------------------------------------------------
// augment / sample-* shared machinery

struct AugmentArgs {
  std::string config_path;
  std::optional<std::string> golden, pseudo, triplets, alignments, output, stats_output;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> mask_token, sep_token, lid_lang;
  std::optional<std::size_t> repeat, threads, min_tokens, max_tokens;
  std::optional<double> beta1, beta2, quality_threshold;
  bool force = false;
  bool allow_empty = false;
  bool keep_one_sided = false;
};

void add_augment_flags(CLI::App* cmd, AugmentArgs& args) {
  cmd->add_option("--config", args.config_path, "key=value config file");
  cmd->add_option("--output,-o", args.output, "output TS-example TSV ('-' = stdout)");
  cmd->add_option("--stats-output", args.stats_output, "write key=value stats here");
  cmd->add_option("--seed", args.seed, "RNG seed for span sampling");
  cmd->add_option("--mask-token", args.mask_token, "mask placeholder token");
  cmd->add_option("--sep-token", args.sep_token, "separator token (collision checks)");
  cmd->add_option("--repeat", args.repeat, "examples sampled per surviving pair");
  cmd->add_option("--threads", args.threads, "worker threads (output is thread-invariant)");
  cmd->add_option("--min", args.min_tokens, "minimum sentence length kept");
  cmd->add_option("--max", args.max_tokens, "maximum sentence length kept");
  cmd->add_option("--beta1", args.beta1, "candidate quality threshold (strictly below)");
  cmd->add_option("--beta2", args.beta2, "minimum mean-NLL reduction");
  cmd->add_flag("--force", args.force, "overwrite existing outputs");
  cmd->add_flag("--allow-empty", args.allow_empty, "exit 0 even when nothing was emitted");
  cmd->add_flag("--keep-one-sided", args.keep_one_sided,
                "keep insertion/deletion phrase pairs");
}

// Builds the scorer/LM and merges config-file values with flag overrides
// (flags win).
PipelineConfig build_pipeline_config(const AugmentArgs& args) {
  ConfigMap file;
  if (!args.config_path.empty()) file = load_config(args.config_path);
  auto value = [&](const char* key) -> std::optional<std::string> {
    const auto it = file.find(key);
    if (it == file.end() || it->second.empty()) return std::nullopt;
    return it->second;
  };

  PipelineConfig cfg;
  if (const auto v = value("golden_input")) cfg.golden_input = *v;
  if (const auto v = value("pseudo_input")) cfg.pseudo_input = *v;
  if (const auto v = value("triplet_input")) cfg.triplet_input = *v;
  if (const auto v = value("alignment_input")) cfg.alignment_input = *v;
  if (const auto v = value("output")) cfg.output = *v;
  if (const auto v = value("stats_output")) cfg.stats_output = *v;
  if (const auto v = value("min_tokens")) cfg.bounds.min_tokens = to_u64("min_tokens", *v);
  if (const auto v = value("max_tokens")) cfg.bounds.max_tokens = to_u64("max_tokens", *v);
  if (const auto v = value("quality_threshold")) {
    cfg.quality_threshold = to_double("quality_threshold", *v);
  }
  if (const auto v = value("lid_lang")) cfg.lid_lang = lang_from_string(*v);
  if (const auto v = value("beta1")) cfg.thresholds.beta1 = to_double("beta1", *v);
  if (const auto v = value("beta2")) cfg.thresholds.beta2 = to_double("beta2", *v);
  if (const auto v = value("seed")) cfg.seed = to_u64("seed", *v);
  if (const auto v = value("mask_token")) cfg.mask_token = *v;
  if (const auto v = value("sep_token")) cfg.sep_token = *v;
  if (const auto v = value("repeat")) cfg.repeat = to_u64("repeat", *v);
  if (const auto v = value("min_span_len")) cfg.min_span_len = to_u64("min_span_len", *v);
  if (const auto v = value("max_span_len")) cfg.max_span_len = to_u64("max_span_len", *v);
  if (const auto v = value("threads")) cfg.threads = to_u64("threads", *v);
  if (const auto v = value("keep_one_sided")) {
    cfg.keep_one_sided = to_bool("keep_one_sided", *v);
  }
  if (const auto v = value("force")) cfg.force = to_bool("force", *v);

  // Flags override the file.
  if (args.golden) cfg.golden_input = *args.golden;
  if (args.pseudo) cfg.pseudo_input = *args.pseudo;
  if (args.triplets) cfg.triplet_input = *args.triplets;
  if (args.alignments) cfg.alignment_input = *args.alignments;
  if (args.output) cfg.output = *args.output;
  if (args.stats_output) cfg.stats_output = *args.stats_output;
  if (args.seed) cfg.seed = *args.seed;
  if (args.mask_token) cfg.mask_token = *args.mask_token;
  if (args.sep_token) cfg.sep_token = *args.sep_token;
  if (args.repeat) cfg.repeat = *args.repeat;
  if (args.threads) cfg.threads = *args.threads;
  if (args.min_tokens) cfg.bounds.min_tokens = *args.min_tokens;
  if (args.max_tokens) cfg.bounds.max_tokens = *args.max_tokens;
  if (args.beta1) cfg.thresholds.beta1 = *args.beta1;
  if (args.beta2) cfg.thresholds.beta2 = *args.beta2;
  if (args.quality_threshold) cfg.quality_threshold = *args.quality_threshold;
  if (args.lid_lang) cfg.lid_lang = lang_from_string(*args.lid_lang);
  if (args.force) cfg.force = true;
  if (args.keep_one_sided) cfg.keep_one_sided = true;

  // Scorer: dual conditional cross-entropy over lexical tables.
  const auto lex_fwd = value("lex_forward");
  const auto lex_bwd = value("lex_backward");
  if (lex_fwd.has_value() != lex_bwd.has_value()) {
    throw ConfigError("lex_forward and lex_backward must be configured together");
  }
  if (lex_fwd) {
    cfg.scorer = std::make_shared<DualCEScorer>(
        std::make_shared<LexicalCrossEntropy>(LexicalTable::load_file(*lex_fwd)),
        std::make_shared<LexicalCrossEntropy>(LexicalTable::load_file(*lex_bwd)));
  }

  // The golden-corpus filter may use its own scorer instance.
  const auto corpus_fwd = value("corpus_lex_forward");
  const auto corpus_bwd = value("corpus_lex_backward");
  if (corpus_fwd.has_value() != corpus_bwd.has_value()) {
    throw ConfigError("corpus_lex_forward and corpus_lex_backward must be configured together");
  }
  if (corpus_fwd) {
    cfg.corpus_scorer = std::make_shared<DualCEScorer>(
        std::make_shared<LexicalCrossEntropy>(LexicalTable::load_file(*corpus_fwd)),
        std::make_shared<LexicalCrossEntropy>(LexicalTable::load_file(*corpus_bwd)));
  }

  // Language model: load a persisted one or train the reference n-gram LM.
  const auto lm_file = value("lm_file");
  const auto lm_train = value("lm_train_file");
  if (lm_file && lm_train) {
    throw ConfigError("set either lm_file or lm_train_file, not both");
  }
  if (lm_file) {
    cfg.lm = std::make_shared<NgramLM>(NgramLM::load_file(*lm_file));
  } else if (lm_train) {
    const std::size_t order = value("lm_order") ? to_u64("lm_order", *value("lm_order")) : 3;
    const double k = value("lm_k") ? to_double("lm_k", *value("lm_k")) : 0.1;
    auto lm = std::make_shared<NgramLM>(order, k);
    LineReader reader(*lm_train);
    std::string line;
    while (reader.next(line)) {
      const TokenSeq sentence = tokenize(line);
      if (!sentence.empty()) lm->add_sentence(sentence);
    }
    if (!lm->trained()) throw ConfigError(*lm_train + ": LM training file is empty");
    cfg.lm = lm;
  }
  return cfg;
}

int finish_pipeline(const PipelineStats& stats, bool allow_empty) {
  std::cerr << stats.table();
  if (stats.total_emitted() == 0 && !allow_empty) {
    log_warn("no examples emitted (pass --allow-empty to treat this as success)");
    return kExitData;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// filter

int run_filter(const std::string& input, const std::string& output, std::size_t min_tokens,
               std::size_t max_tokens, const std::string& lid_lang,
               const std::string& lid_side, bool force) {
  const LengthBounds bounds{min_tokens, max_tokens};
  validate_bounds(bounds);
  std::optional<LangTag> lang;
  if (!lid_lang.empty()) lang = lang_from_string(lid_lang);
  if (lid_side != "source" && lid_side != "reference") {
    throw ConfigError("--lid-side must be 'source' or 'reference'");
  }

  LineReader reader(input);
  LineWriter writer(output, force);
  std::string line;
  std::uint64_t read = 0, kept = 0;
  while (reader.next(line)) {
    ++read;
    const ParallelPair pair = [&] {
      try {
        return parse_parallel_row(line, reader.line_no());
      } catch (const DataError& e) {
        throw DataError(reader.path() + ": " + e.what());
      }
    }();
    if (!length_filter(pair, bounds)) continue;
    if (lang) {
      const TokenSeq& side = lid_side == "source" ? pair.source : pair.reference;
      if (!language_id_filter(side, *lang)) continue;
    }
    ++kept;
    writer.write_line(line);
    if (read % 100000 == 0) log_info("filter: processed " + std::to_string(read) + " lines");
  }
  std::cerr << "filter: read=" << read << " kept=" << kept << " dropped=" << (read - kept)
            << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// align-extract

int run_align_extract(const std::string& triplet_path, const std::string& align_path,
                      const std::string& output, bool keep_one_sided, bool force) {
  LineReader triplets(triplet_path);
  LineReader aligns(align_path);
  LineWriter writer(output, force);
  const ExtractOptions options{keep_one_sided};

  std::string triplet_line, align_line;
  std::uint64_t rows = 0, phrases = 0, skipped = 0;
  while (triplets.next(triplet_line)) {
    if (!aligns.next(align_line)) {
      throw DataError(align_path + " has fewer rows than " + triplet_path);
    }
    ++rows;
    Triplet t;
    Alignment a;
    try {
      t = parse_triplet_row(triplet_line, triplets.line_no());
    } catch (const DataError& e) {
      throw DataError(triplet_path + ": " + e.what());
    }
    try {
      a = parse_alignment(align_line, aligns.line_no());
    } catch (const DataError& e) {
      throw DataError(align_path + ": " + e.what());
    }
    try {
      for (const auto& pair : extract_phrases(t.mt, t.reference, a, options)) {
        writer.write_line(dump_phrase(t.mt, t.reference, pair));
        ++phrases;
      }
    } catch (const DataError& e) {
      ++skipped;
      log_warn(triplet_path + ": line " + std::to_string(triplets.line_no()) +
               ": triplet skipped: " + e.what());
    }
    if (rows % 100000 == 0) log_info("align-extract: processed " + std::to_string(rows) + " rows");
  }
  if (aligns.next(align_line)) {
    throw DataError(align_path + " has more rows than " + triplet_path);
  }
  std::cerr << "align-extract: rows=" << rows << " phrases=" << phrases
            << " skipped=" << skipped << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// stats

int run_stats(const std::string& input) {
  LineReader reader(input);
  std::string line;
  std::uint64_t rows = 0;
  std::size_t columns = 0;
  std::vector<std::uint64_t> tokens, min_len, max_len;
  while (reader.next(line)) {
    ++rows;
    std::vector<std::string_view> cols;
    std::size_t start = 0;
    std::string_view row(line);
    while (true) {
      const std::size_t tab = row.find('\t', start);
      cols.push_back(row.substr(start, tab == std::string_view::npos ? tab : tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (rows == 1) {
      columns = cols.size();
      tokens.assign(columns, 0);
      min_len.assign(columns, std::numeric_limits<std::uint64_t>::max());
      max_len.assign(columns, 0);
    } else if (cols.size() != columns) {
      throw DataError(reader.path() + ": line " + std::to_string(reader.line_no()) +
                      ": expected " + std::to_string(columns) + " columns, got " +
                      std::to_string(cols.size()));
    }
    for (std::size_t c = 0; c < columns; ++c) {
      const std::size_t n = tokenize(cols[c]).size();
      tokens[c] += n;
      min_len[c] = std::min<std::uint64_t>(min_len[c], n);
      max_len[c] = std::max<std::uint64_t>(max_len[c], n);
    }
  }
  std::cout << "rows=" << rows << '\n';
  std::cout << "columns=" << columns << '\n';
  for (std::size_t c = 0; c < columns; ++c) {
    const double mean = rows == 0 ? 0.0 : static_cast<double>(tokens[c]) / double(rows);
    std::cout << "col" << c << ".tokens=" << tokens[c] << '\n';
    std::cout << "col" << c << ".min_len=" << (rows == 0 ? 0 : min_len[c]) << '\n';
    std::cout << "col" << c << ".max_len=" << max_len[c] << '\n';
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.3f", mean);
    std::cout << "col" << c << ".mean_len=" << buf << '\n';
  }
  std::cerr << "stats: " << rows << " rows, " << columns << " columns\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"translation-suggestion data augmentation toolkit"};
  app.require_subcommand(1);

  // filter ------------------------------------------------------------------
  std::string f_input = "-", f_output = "-", f_lid_lang, f_lid_side = "source";
  std::size_t f_min = 20, f_max = 80;
  bool f_force = false;
  CLI::App* filter_cmd = app.add_subcommand("filter", "length/LID filter for parallel TSV");
  filter_cmd->add_option("--input,-i", f_input, "parallel TSV ('-' = stdin)");
  filter_cmd->add_option("--output,-o", f_output, "surviving rows ('-' = stdout)");
  filter_cmd->add_option("--min", f_min, "minimum tokens per side (default 20)");
  filter_cmd->add_option("--max", f_max, "maximum tokens per side (default 80)");
  filter_cmd->add_option("--lid-lang", f_lid_lang, "also apply language-id (en|de|zh)");
  filter_cmd->add_option("--lid-side", f_lid_side, "side checked by LID (source|reference)");
  filter_cmd->add_flag("--force", f_force, "overwrite existing output");

  // sample-golden / sample-pseudo --------------------------------------------
  AugmentArgs golden_args;
  std::string sg_input = "-";
  CLI::App* golden_cmd =
      app.add_subcommand("sample-golden", "span-mask a parallel corpus into TS examples");
  golden_cmd->add_option("--input,-i", sg_input, "parallel TSV (source, reference)");
  add_augment_flags(golden_cmd, golden_args);

  AugmentArgs pseudo_args;
  std::string sp_input = "-";
  CLI::App* pseudo_cmd = app.add_subcommand(
      "sample-pseudo", "span-mask a pseudo-parallel corpus (MT target side)");
  pseudo_cmd->add_option("--input,-i", sp_input, "pseudo-parallel TSV (source, MT)");
  add_augment_flags(pseudo_cmd, pseudo_args);

  // align-extract -------------------------------------------------------------
  std::string ax_triplets, ax_aligns, ax_output = "-";
  bool ax_keep = false, ax_force = false;
  CLI::App* extract_cmd =
      app.add_subcommand("align-extract", "dump trimmed aligned phrase pairs");
  extract_cmd->add_option("--triplets", ax_triplets, "triplet TSV (source, mt, reference)")
      ->required();
  extract_cmd->add_option("--alignments", ax_aligns, "mt->reference links, row-aligned")
      ->required();
  extract_cmd->add_option("--output,-o", ax_output, "phrase dump output");
  extract_cmd->add_flag("--keep-one-sided", ax_keep, "keep insertion/deletion pairs");
  extract_cmd->add_flag("--force", ax_force, "overwrite existing output");

  // augment -------------------------------------------------------------------
  AugmentArgs augment_args;
  CLI::App* augment_cmd =
      app.add_subcommand("augment", "run the configured augmentation routes");
  augment_cmd->add_option("--golden", augment_args.golden, "parallel TSV for the golden route");
  augment_cmd->add_option("--pseudo", augment_args.pseudo,
                          "pseudo-parallel TSV for the pseudo route");
  augment_cmd->add_option("--triplets", augment_args.triplets, "triplet TSV for the aligned route");
  augment_cmd->add_option("--alignments", augment_args.alignments,
                          "alignment links for the aligned route");
  augment_cmd
      ->add_option("--quality-threshold", augment_args.quality_threshold,
                   "golden-route corpus quality threshold (needs lexical tables)")
      ->check(CLI::Number);
  augment_cmd->add_option("--lid-lang", augment_args.lid_lang,
                          "pseudo-route source-side LID (en|de|zh)");
  add_augment_flags(augment_cmd, augment_args);

  // evaluate ------------------------------------------------------------------
  std::string ev_hyp, ev_gold;
  CLI::App* evaluate_cmd =
      app.add_subcommand("evaluate", "corpus BLEU of top-1 suggestions against labels");
  evaluate_cmd->add_option("--hyp", ev_hyp, "candidate rows, ' ||| ' separated")->required();
  evaluate_cmd->add_option("--gold", ev_gold, "one reference label per line")->required();

  // stats ---------------------------------------------------------------------
  std::string st_input = "-";
  CLI::App* stats_cmd = app.add_subcommand("stats", "row/token statistics of a TSV dataset");
  stats_cmd->add_option("--input,-i", st_input, "dataset file ('-' = stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*filter_cmd) {
      return run_filter(f_input, f_output, f_min, f_max, f_lid_lang, f_lid_side, f_force);
    }
    if (*golden_cmd || *pseudo_cmd) {
      const bool pseudo = static_cast<bool>(*pseudo_cmd);
      AugmentArgs& args = pseudo ? pseudo_args : golden_args;
      PipelineConfig cfg = build_pipeline_config(args);
      // Pure sampling: no corpus filters on this path.
      cfg.bounds = LengthBounds{1, std::numeric_limits<std::size_t>::max()};
      cfg.quality_threshold.reset();
      cfg.lid_lang.reset();
      cfg.triplet_input.clear();
      cfg.alignment_input.clear();
      if (pseudo) {
        cfg.pseudo_input = sp_input;
        cfg.golden_input.clear();
      } else {
        cfg.golden_input = sg_input;
        cfg.pseudo_input.clear();
      }
      if (cfg.output.empty()) cfg.output = "-";
      return finish_pipeline(run_pipeline(cfg), args.allow_empty);
    }
    if (*extract_cmd) {
      return run_align_extract(ax_triplets, ax_aligns, ax_output, ax_keep, ax_force);
    }
    if (*augment_cmd) {
      const PipelineConfig cfg = build_pipeline_config(augment_args);
      return finish_pipeline(run_pipeline(cfg), augment_args.allow_empty);
    }
    if (*evaluate_cmd) {
      std::cout << evaluate_topk(ev_hyp, ev_gold).to_string() << '\n';
      return kExitOk;
    }
    if (*stats_cmd) {
      return run_stats(st_input);
    }
  } catch (const ConfigError& e) {
    std::cerr << "tsforge: error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DataError& e) {
    std::cerr << "tsforge: error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "tsforge: unexpected error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
