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

#include "tsforge/augment.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <vector>

#include "tsforge/errors.hpp"
#include "tsforge/log.hpp"
#include "tsforge/parallel.hpp"
#include "tsforge/rng.hpp"
#include "tsforge/span_sampler.hpp"

namespace tsforge {

namespace {

constexpr std::size_t kChunkSize = 1024;
constexpr std::size_t kProgressEvery = 100000;

// Route namespaces for seed derivation; keeps the golden and pseudo RNG
// streams independent even on identical inputs.
constexpr std::uint64_t kGoldenSalt = 0x676f6c64656e0000ULL;
constexpr std::uint64_t kPseudoSalt = 0x70736575646f0000ULL;

void report_progress(std::string_view route, std::size_t lines) {
  if (lines % kProgressEvery == 0) {
    log_info(std::string(route) + ": processed " + std::to_string(lines) + " lines");
  }
}

void append_row(std::string& out, std::string_view route, std::string_view stage,
                std::uint64_t count) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "  %-8.*s %-13.*s %12llu\n", int(route.size()),
                route.data(), int(stage.size()), stage.data(),
                static_cast<unsigned long long>(count));
  out += buf;
}

struct SampleItem {
  ParallelPair pair;
  std::size_t ordinal = 0;  // 0-based input row
};

struct SampleResult {
  bool length_kept = false;
  bool stage2_kept = false;  // quality (golden) or LID (pseudo)
  std::vector<std::string> lines;
};

void run_sampling_route(const PipelineConfig& cfg, Origin origin, LineWriter& out,
                        PipelineStats& stats) {
  const bool pseudo = origin == Origin::pseudo;
  const std::string& path = pseudo ? cfg.pseudo_input : cfg.golden_input;
  const char* route_name = pseudo ? "pseudo" : "golden";
  const std::uint64_t route_seed =
      splitmix64(cfg.seed ^ (pseudo ? kPseudoSalt : kGoldenSalt));
  SamplerConfig sampler;
  sampler.seed = cfg.seed;
  sampler.mask_token = cfg.mask_token;
  sampler.min_span_len = cfg.min_span_len;
  sampler.max_span_len = cfg.max_span_len;

  LineReader reader(path);
  std::string line;
  std::vector<SampleItem> items;
  std::vector<SampleResult> results;
  items.reserve(kChunkSize);
  bool more = true;

  while (more) {
    items.clear();
    while (items.size() < kChunkSize && (more = reader.next(line))) {
      SampleItem item;
      try {
        item.pair = parse_parallel_row(line, reader.line_no());
      } catch (const DataError& e) {
        throw DataError(path + ": " + e.what());
      }
      item.ordinal = reader.line_no() - 1;
      items.push_back(std::move(item));
      report_progress(route_name, reader.line_no());
    }
    if (items.empty()) break;

    results.assign(items.size(), SampleResult{});
    parallel_for(items.size(), cfg.threads, [&](std::size_t idx) {
      const SampleItem& item = items[idx];
      SampleResult& r = results[idx];
      if (!length_filter(item.pair, cfg.bounds)) return;
      r.length_kept = true;
      if (pseudo) {
        if (cfg.lid_lang && !language_id_filter(item.pair.source, *cfg.lid_lang)) return;
      } else if (cfg.quality_threshold) {
        const QualityScorer& scorer = cfg.corpus_scorer ? *cfg.corpus_scorer : *cfg.scorer;
        double quality = 0.0;
        try {
          quality = scorer.score(item.pair.source, item.pair.reference);
        } catch (const std::exception& e) {
          log_warn(path + ": line " + std::to_string(item.ordinal + 1) +
                   ": quality scorer failed, pair dropped: " + e.what());
          return;
        }
        if (!(quality < *cfg.quality_threshold)) return;
      }
      r.stage2_kept = true;

      Rng rng(derive_seed(route_seed, item.ordinal));
      try {
        for (std::size_t rep = 0; rep < cfg.repeat; ++rep) {
          const TSExample example = pseudo ? make_pseudo_example(item.pair, sampler, rng)
                                           : make_golden_example(item.pair, sampler, rng);
          r.lines.push_back(serialize_example(example));
        }
      } catch (const DataError& e) {
        r.lines.clear();
        log_warn(path + ": line " + std::to_string(item.ordinal + 1) +
                 ": pair skipped: " + e.what());
      }
    });

    for (std::size_t i = 0; i < items.size(); ++i) {
      const SampleResult& r = results[i];
      if (pseudo) {
        ++stats.pseudo.read;
        if (r.length_kept) ++stats.pseudo.length_kept;
        if (r.stage2_kept) ++stats.pseudo.lid_kept;
        stats.pseudo.emitted += r.lines.size();
      } else {
        ++stats.golden.read;
        if (r.length_kept) ++stats.golden.length_kept;
        if (r.stage2_kept) ++stats.golden.quality_kept;
        stats.golden.emitted += r.lines.size();
      }
      for (const auto& l : r.lines) out.write_line(l);
    }
  }
}

struct AlignedItem {
  Triplet triplet;
  Alignment alignment;
  std::size_t line_no = 0;
};

struct AlignedResult {
  std::uint64_t phrases = 0;
  std::uint64_t accepted = 0;
  bool skipped = false;
  std::vector<std::string> lines;
};

void run_aligned_route(const PipelineConfig& cfg, LineWriter& out, PipelineStats& stats) {
  LineReader triplets(cfg.triplet_input);
  LineReader aligns(cfg.alignment_input);
  const ExtractOptions extract_options{cfg.keep_one_sided};

  std::string triplet_line;
  std::string align_line;
  std::vector<AlignedItem> items;
  std::vector<AlignedResult> results;
  items.reserve(kChunkSize);
  bool more = true;

  while (more) {
    items.clear();
    while (items.size() < kChunkSize && (more = triplets.next(triplet_line))) {
      if (!aligns.next(align_line)) {
        throw DataError(cfg.alignment_input + " ends at line " +
                        std::to_string(aligns.line_no()) + " but " + cfg.triplet_input +
                        " continues; the files must be row-aligned");
      }
      AlignedItem item;
      try {
        item.triplet = parse_triplet_row(triplet_line, triplets.line_no());
      } catch (const DataError& e) {
        throw DataError(cfg.triplet_input + ": " + e.what());
      }
      try {
        item.alignment = parse_alignment(align_line, aligns.line_no());
      } catch (const DataError& e) {
        throw DataError(cfg.alignment_input + ": " + e.what());
      }
      item.line_no = triplets.line_no();
      items.push_back(std::move(item));
      report_progress("aligned", triplets.line_no());
    }
    if (!more && aligns.next(align_line)) {
      throw DataError(cfg.triplet_input + " ends at line " + std::to_string(triplets.line_no()) +
                      " but " + cfg.alignment_input + " continues; the files must be row-aligned");
    }
    if (items.empty()) break;

    results.assign(items.size(), AlignedResult{});
    parallel_for(items.size(), cfg.threads, [&](std::size_t idx) {
      const AlignedItem& item = items[idx];
      AlignedResult& r = results[idx];
      try {
        check_alignment_bounds(item.alignment, item.triplet.mt.size(),
                               item.triplet.reference.size());
        const auto pairs =
            extract_phrases(item.triplet.mt, item.triplet.reference, item.alignment,
                            extract_options);
        r.phrases = pairs.size();
        for (const auto& pair : pairs) {
          Candidate candidate = build_candidate(item.triplet, pair);
          bool ok = false;
          try {
            ok = accept_candidate(candidate, *cfg.scorer, *cfg.lm, cfg.thresholds);
          } catch (const std::exception& e) {
            log_warn(cfg.triplet_input + ": line " + std::to_string(item.line_no) +
                     ": candidate rejected, scorer failed: " + e.what());
            continue;
          }
          if (!ok) continue;
          ++r.accepted;
          try {
            r.lines.push_back(serialize_example(
                make_aligned_example(candidate, cfg.mask_token, cfg.keep_one_sided)));
          } catch (const DataError& e) {
            log_warn(cfg.triplet_input + ": line " + std::to_string(item.line_no) +
                     ": example skipped: " + e.what());
          }
        }
      } catch (const DataError& e) {
        r = AlignedResult{};
        r.skipped = true;
        log_warn(cfg.triplet_input + ": line " + std::to_string(item.line_no) +
                 ": triplet skipped: " + e.what());
      }
    });

    for (std::size_t i = 0; i < items.size(); ++i) {
      const AlignedResult& r = results[i];
      ++stats.aligned.read;
      stats.aligned.phrases += r.phrases;
      stats.aligned.accepted += r.accepted;
      stats.aligned.emitted += r.lines.size();
      if (r.skipped) ++stats.aligned.skipped;
      for (const auto& l : r.lines) out.write_line(l);
    }
  }
}

void validate_config(const PipelineConfig& cfg) {
  if (cfg.golden_input.empty() && cfg.pseudo_input.empty() && cfg.triplet_input.empty()) {
    throw ConfigError("no routes configured: set golden_input, pseudo_input or triplet_input");
  }
  if (cfg.output.empty()) throw ConfigError("output path is required");
  validate_bounds(cfg.bounds);
  validate_thresholds(cfg.thresholds);
  if (cfg.repeat < 1) throw ConfigError("repeat must be >= 1");
  if (cfg.threads < 1) throw ConfigError("threads must be >= 1");
  if (!is_valid_token(cfg.mask_token)) throw ConfigError("mask token must be a valid token");
  if (!is_valid_token(cfg.sep_token)) throw ConfigError("separator token must be a valid token");
  if (cfg.mask_token == cfg.sep_token) {
    throw ConfigError("mask token and separator token must differ");
  }
  if (!cfg.triplet_input.empty() && cfg.alignment_input.empty()) {
    throw ConfigError("the aligned route needs alignment_input next to triplet_input");
  }
  if (cfg.triplet_input.empty() && !cfg.alignment_input.empty()) {
    throw ConfigError("alignment_input given but triplet_input missing");
  }
  if (!cfg.triplet_input.empty() && (!cfg.scorer || !cfg.lm)) {
    throw ConfigError("the aligned route needs a quality scorer and a language model");
  }
  if (cfg.quality_threshold && !cfg.scorer && !cfg.corpus_scorer) {
    throw ConfigError("quality_threshold set but no quality scorer configured");
  }
  for (const std::string& path :
       {cfg.golden_input, cfg.pseudo_input, cfg.triplet_input, cfg.alignment_input}) {
    if (!path.empty() && path != "-" && !std::filesystem::exists(path)) {
      throw ConfigError("input file does not exist: " + path);
    }
  }
}

}  // namespace

void validate_thresholds(const Thresholds& t) {
  if (!std::isfinite(t.beta1) || !std::isfinite(t.beta2)) {
    throw ConfigError("thresholds beta1/beta2 must be finite");
  }
}

Candidate build_candidate(const Triplet& triplet, const PhrasePair& pair) {
  if (pair.y_span.end() > triplet.mt.size() ||
      pair.r_span.end() > triplet.reference.size()) {
    throw DataError("phrase pair out of bounds for triplet");
  }
  const auto& mt = triplet.mt.tokens();
  const auto& ref = triplet.reference.tokens();
  std::vector<std::string> corrected;
  corrected.reserve(mt.size() - pair.y_span.len + pair.r_span.len);
  corrected.insert(corrected.end(), mt.begin(), mt.begin() + pair.y_span.start);
  corrected.insert(corrected.end(), ref.begin() + pair.r_span.start,
                   ref.begin() + pair.r_span.end());
  corrected.insert(corrected.end(), mt.begin() + pair.y_span.end(), mt.end());

  Candidate candidate;
  candidate.source = triplet.source;
  candidate.mt = triplet.mt;
  candidate.corrected = TokenSeq(std::move(corrected));
  candidate.pair = pair;
  return candidate;
}

bool accept_candidate(Candidate& candidate, const QualityScorer& scorer,
                      const LanguageModel& lm, const Thresholds& thresholds) {
  candidate.quality = scorer.score(candidate.source, candidate.corrected);
  candidate.nll_mt = lm.mean_nll(candidate.mt);
  candidate.nll_corrected = lm.mean_nll(candidate.corrected);
  return candidate.quality < thresholds.beta1 &&
         candidate.nll_mt - candidate.nll_corrected >= thresholds.beta2;
}

TSExample make_aligned_example(const Candidate& candidate, std::string_view mask_token,
                               bool allow_empty_label) {
  const Span y = candidate.pair.y_span;
  const auto& corrected = candidate.corrected.tokens();
  std::vector<std::string> label_tokens(
      corrected.begin() + y.start,
      corrected.begin() + y.start + candidate.pair.r_span.len);

  TSExample example;
  example.source = candidate.source;
  example.label = TokenSeq(std::move(label_tokens));
  example.origin = Origin::aligned;
  if (y.len == 0) {
    // Insertion suggestion: the mask sits between tokens, covering nothing.
    if (candidate.mt.contains(mask_token)) {
      throw DataError("mask token \"" + std::string(mask_token) +
                      "\" already occurs in the sentence");
    }
    std::vector<std::string> masked;
    masked.reserve(candidate.mt.size() + 1);
    for (std::size_t i = 0; i < candidate.mt.size(); ++i) {
      if (i == y.start) masked.emplace_back(mask_token);
      masked.push_back(candidate.mt[i]);
    }
    if (y.start == candidate.mt.size()) masked.emplace_back(mask_token);
    example.masked_target = TokenSeq(std::move(masked));
  } else {
    example.masked_target = apply_mask(candidate.mt, y, mask_token).masked;
  }
  validate_example(example, mask_token, allow_empty_label);
  return example;
}

std::string PipelineStats::key_values() const {
  std::string out;
  auto kv = [&out](std::string_view key, std::uint64_t value) {
    out += key;
    out += '=';
    out += std::to_string(value);
    out += '\n';
  };
  kv("golden.read", golden.read);
  kv("golden.length_kept", golden.length_kept);
  kv("golden.quality_kept", golden.quality_kept);
  kv("golden.emitted", golden.emitted);
  kv("pseudo.read", pseudo.read);
  kv("pseudo.length_kept", pseudo.length_kept);
  kv("pseudo.lid_kept", pseudo.lid_kept);
  kv("pseudo.emitted", pseudo.emitted);
  kv("aligned.read", aligned.read);
  kv("aligned.phrases", aligned.phrases);
  kv("aligned.accepted", aligned.accepted);
  kv("aligned.emitted", aligned.emitted);
  kv("aligned.skipped", aligned.skipped);
  kv("total.emitted", total_emitted());
  return out;
}

std::string PipelineStats::table() const {
  std::string out = "  route    stage                count\n";
  append_row(out, "golden", "read", golden.read);
  append_row(out, "golden", "length_kept", golden.length_kept);
  append_row(out, "golden", "quality_kept", golden.quality_kept);
  append_row(out, "golden", "emitted", golden.emitted);
  append_row(out, "pseudo", "read", pseudo.read);
  append_row(out, "pseudo", "length_kept", pseudo.length_kept);
  append_row(out, "pseudo", "lid_kept", pseudo.lid_kept);
  append_row(out, "pseudo", "emitted", pseudo.emitted);
  append_row(out, "aligned", "read", aligned.read);
  append_row(out, "aligned", "phrases", aligned.phrases);
  append_row(out, "aligned", "accepted", aligned.accepted);
  append_row(out, "aligned", "emitted", aligned.emitted);
  append_row(out, "aligned", "skipped", aligned.skipped);
  append_row(out, "total", "emitted", total_emitted());
  return out;
}

PipelineStats run_pipeline(const PipelineConfig& config) {
  validate_config(config);
  PipelineStats stats;
  LineWriter out(config.output, config.force);
  if (!config.golden_input.empty()) {
    run_sampling_route(config, Origin::golden, out, stats);
  }
  if (!config.pseudo_input.empty()) {
    run_sampling_route(config, Origin::pseudo, out, stats);
  }
  if (!config.triplet_input.empty()) {
    run_aligned_route(config, out, stats);
  }
  out.flush();
  if (!config.stats_output.empty()) {
    LineWriter stats_out(config.stats_output, config.force);
    std::string kv = stats.key_values();
    if (!kv.empty() && kv.back() == '\n') kv.pop_back();
    stats_out.write_line(kv);
  }
  return stats;
}

}  // namespace tsforge
