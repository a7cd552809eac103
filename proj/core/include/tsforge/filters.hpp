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

#ifndef TSFORGE_FILTERS_HPP_
#define TSFORGE_FILTERS_HPP_

#include <string_view>

#include "tsforge/corpus_io.hpp"
#include "tsforge/token_seq.hpp"

namespace tsforge {

/// Inclusive token-count bounds for corpus filtering. The defaults drop
/// sentences shorter than 20 or longer than 80 tokens.
struct LengthBounds {
  std::size_t min_tokens = 20;
  std::size_t max_tokens = 80;
};

/// Throws ConfigError unless 1 <= min <= max.
void validate_bounds(const LengthBounds& bounds);

bool within_bounds(const TokenSeq& seq, const LengthBounds& bounds);

/// Keep iff both sides satisfy min <= length <= max.
bool length_filter(const ParallelPair& pair, const LengthBounds& bounds);

enum class LangTag { en, de, zh };

LangTag lang_from_string(std::string_view tag);  // throws ConfigError
std::string_view to_string(LangTag tag);

/// Reference language-id heuristic: keep iff at least half of the letter-like
/// characters belong to the expected script class (Latin for en/de, Han for
/// zh). Sequences with no letter-like characters are rejected. Swap in a real
/// LID model for production corpora.
bool language_id_filter(const TokenSeq& seq, LangTag expected);

/// Parallel-sentence quality score; lower is better. Implementations must be
/// deterministic, return finite values for non-empty inputs, and be safe to
/// call from many threads.
class QualityScorer {
 public:
  virtual ~QualityScorer() = default;
  virtual double score(const TokenSeq& source, const TokenSeq& target) const = 0;
};

/// Sentence fluency model. mean_nll is the mean per-token negative
/// log-likelihood in nats; exp(mean_nll) is the perplexity.
class LanguageModel {
 public:
  virtual ~LanguageModel() = default;
  virtual double mean_nll(const TokenSeq& sentence) const = 0;
};

}  // namespace tsforge

#endif  // TSFORGE_FILTERS_HPP_
