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

#ifndef TSFORGE_BLEU_HPP_
#define TSFORGE_BLEU_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tsforge/token_seq.hpp"

namespace tsforge {

struct BleuScore {
  double score = 0.0;                     // 0..100
  std::array<double, 4> precisions{};    // clipped modified n-gram precisions
  double brevity_penalty = 1.0;
  std::size_t hyp_len = 0;
  std::size_t ref_len = 0;

  std::string to_string() const;  // "BLEU = 63.40 (..)" one-line report
};

/// Streaming accumulator behind corpus_bleu; lets callers pool clipped
/// counts pair by pair without holding the corpus.
class BleuAccumulator {
 public:
  void add(const TokenSeq& hyp, const TokenSeq& ref);
  std::size_t pairs() const { return pairs_; }

  /// Throws DataError when no pairs were added.
  BleuScore finish() const;

 private:
  std::array<std::size_t, 4> matched_{};
  std::array<std::size_t, 4> total_{};
  std::size_t hyp_len_ = 0;
  std::size_t ref_len_ = 0;
  std::size_t pairs_ = 0;
};

/// Corpus-level 4-gram BLEU over pooled clipped counts with brevity penalty
/// exp(min(0, 1 - ref_len/hyp_len)). One reference per hypothesis; the lists
/// must be the same non-zero length. Unsmoothed: any zero pooled precision
/// zeroes the score. Orders with no n-grams anywhere in the corpus (all rows
/// shorter than n) are treated as vacuously perfect so that identical corpora
/// always score 100.
BleuScore corpus_bleu(std::span<const TokenSeq> hyps, std::span<const TokenSeq> refs);

/// Diagnostic sentence-level variant with add-1 smoothing on orders 2..4.
BleuScore sentence_bleu(const TokenSeq& hyp, const TokenSeq& ref);

/// Top-1 candidate of a hypothesis row: candidates are separated by " ||| ",
/// first one wins. Throws DataError on rows with no candidates (empty rows).
TokenSeq parse_hypothesis_row(std::string_view row, std::size_t line_no = 0);

/// Hypothesis file rows are candidate lists separated by " ||| "; the first
/// candidate is the top-1. Throws DataError on rows with no candidates.
std::vector<TokenSeq> read_hypothesis_file(const std::string& path);

/// One reference label per line (empty lines allowed: empty labels).
std::vector<TokenSeq> read_gold_file(const std::string& path);

/// Top-1 evaluation harness: corpus BLEU of first candidates against labels,
/// streamed row by row. Throws DataError (with both counts) when the files
/// are not row-aligned.
BleuScore evaluate_topk(const std::string& hyp_path, const std::string& gold_path);

}  // namespace tsforge

#endif  // TSFORGE_BLEU_HPP_
