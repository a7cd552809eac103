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

#ifndef TSFORGE_AUGMENT_HPP_
#define TSFORGE_AUGMENT_HPP_

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>

#include "tsforge/corpus_io.hpp"
#include "tsforge/filters.hpp"
#include "tsforge/phrase_align.hpp"
#include "tsforge/ts_example.hpp"

namespace tsforge {

/// Candidate acceptance thresholds: quality must be strictly below beta1 and
/// the mean-NLL reduction of the corrected sentence at least beta2.
struct Thresholds {
  double beta1 = 2.5;
  double beta2 = 0.05;
};

void validate_thresholds(const Thresholds& t);  // finite; throws ConfigError

/// A corrected translation built from one phrase pair, awaiting the
/// quality/fluency acceptance decision. `corrected` is the MT sentence with
/// the y span replaced by the reference phrase.
struct Candidate {
  TokenSeq source;
  TokenSeq mt;
  TokenSeq corrected;
  PhrasePair pair;
  double quality = std::numeric_limits<double>::quiet_NaN();
  double nll_mt = std::numeric_limits<double>::quiet_NaN();
  double nll_corrected = std::numeric_limits<double>::quiet_NaN();
};

/// Splices the reference phrase over the MT span. Throws DataError when the
/// pair is out of bounds for the triplet.
Candidate build_candidate(const Triplet& triplet, const PhrasePair& pair);

/// Fills the candidate's quality and NLL fields and decides acceptance:
/// quality < beta1 AND nll(mt) - nll(corrected) >= beta2. Scorer exceptions
/// propagate; the pipeline treats them as a logged rejection.
bool accept_candidate(Candidate& candidate, const QualityScorer& scorer,
                      const LanguageModel& lm, const Thresholds& thresholds);

/// Masks the MT span and labels it with the reference phrase; origin =
/// aligned. Insertion candidates (empty y span) insert the mask at the span
/// position; deletion candidates need allow_empty_label.
TSExample make_aligned_example(const Candidate& candidate, std::string_view mask_token,
                               bool allow_empty_label = false);

/// Per-stage survivor counts. Within one route the counts never increase
/// from stage to stage (with repeat > 1 the emitted count is per-example,
/// not per-pair).
struct PipelineStats {
  struct Golden {
    std::uint64_t read = 0, length_kept = 0, quality_kept = 0, emitted = 0;
  };
  struct Pseudo {
    std::uint64_t read = 0, length_kept = 0, lid_kept = 0, emitted = 0;
  };
  struct Aligned {
    std::uint64_t read = 0, phrases = 0, accepted = 0, emitted = 0, skipped = 0;
  };

  Golden golden;
  Pseudo pseudo;
  Aligned aligned;

  std::uint64_t total_emitted() const {
    return golden.emitted + pseudo.emitted + aligned.emitted;
  }

  /// Machine-readable "route.stage=count" lines.
  std::string key_values() const;
  /// Human-readable aligned table.
  std::string table() const;
};

struct PipelineConfig {
  // Routes run iff their input path is set.
  std::string golden_input;     // parallel TSV (source, reference)
  std::string pseudo_input;     // parallel TSV (monolingual source, ingested MT)
  std::string triplet_input;    // triplet TSV (source, mt, reference)
  std::string alignment_input;  // mt->reference links, row-aligned with triplet_input
  std::string output;           // TS example TSV; "-" = stdout
  std::string stats_output;     // optional key=value stats dump

  LengthBounds bounds;
  std::optional<double> quality_threshold;  // golden-route corpus quality filter
  std::optional<LangTag> lid_lang;          // pseudo-route source-side LID
  Thresholds thresholds;

  std::uint64_t seed = 0;
  std::string mask_token = "<MASK_REP>";
  std::string sep_token = "[SEP]";
  std::size_t repeat = 1;  // examples sampled per surviving pair
  std::optional<std::size_t> min_span_len;
  std::optional<std::size_t> max_span_len;
  std::size_t threads = 1;
  bool keep_one_sided = false;  // keep insertion/deletion phrase pairs
  bool force = false;           // overwrite existing outputs

  // Required when the aligned route or the quality filter is active.
  std::shared_ptr<const QualityScorer> scorer;
  std::shared_ptr<const LanguageModel> lm;
  // Optional separate scorer for the golden-route corpus filter; falls back
  // to `scorer` when unset.
  std::shared_ptr<const QualityScorer> corpus_scorer;
};

/// Runs every configured route, writing examples in deterministic order
/// (golden, pseudo, aligned; input order within a route; per-record RNG
/// streams). Output bytes depend only on inputs, config and seed, not on
/// the thread count. File-level problems throw; per-record semantic failures
/// are logged and skipped.
PipelineStats run_pipeline(const PipelineConfig& config);

}  // namespace tsforge

#endif  // TSFORGE_AUGMENT_HPP_
