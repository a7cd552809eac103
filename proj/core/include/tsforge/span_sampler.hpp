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

#ifndef TSFORGE_SPAN_SAMPLER_HPP_
#define TSFORGE_SPAN_SAMPLER_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "tsforge/corpus_io.hpp"
#include "tsforge/rng.hpp"
#include "tsforge/span.hpp"
#include "tsforge/token_seq.hpp"
#include "tsforge/ts_example.hpp"

namespace tsforge {

struct SamplerConfig {
  std::uint64_t seed = 0;
  std::string mask_token = "<MASK_REP>";
  // Optional caps on the sampled span length; absent means the full
  // uniform range 1..n.
  std::optional<std::size_t> min_span_len;
  std::optional<std::size_t> max_span_len;
};

/// A sentence with one span replaced by a mask token, together with the
/// removed tokens. Splicing the label back over the mask reconstructs the
/// original exactly.
struct MaskedSentence {
  TokenSeq masked;
  TokenSeq label;
  Span span;

  bool operator==(const MaskedSentence&) const = default;
};

/// Draws the mask span for a sequence of n tokens: length l uniform on
/// {1..n}, then start uniform on {0..n-l}. Throws DataError when n == 0.
Span sample_span(std::size_t n, Rng& rng);

/// sample_span with the config's optional length caps applied (the cap range
/// is clamped into {1..n}).
Span sample_span(std::size_t n, Rng& rng, const SamplerConfig& cfg);

/// Replaces seq[span] with the mask token. Throws DataError on an empty or
/// out-of-bounds span or if the mask token already occurs in seq.
MaskedSentence apply_mask(const TokenSeq& seq, Span span, std::string_view mask_token);

/// Replaces the single occurrence of mask_token in `masked` with
/// `replacement`. Throws DataError unless the mask occurs exactly once.
TokenSeq splice_mask(const TokenSeq& masked, std::string_view mask_token,
                     const TokenSeq& replacement);

/// Samples a span on the reference side and masks it; origin = golden.
TSExample make_golden_example(const ParallelPair& pair, const SamplerConfig& cfg, Rng& rng);

/// Same procedure over a pseudo-parallel pair (reference side is an ingested
/// MT output); origin = pseudo.
TSExample make_pseudo_example(const ParallelPair& pair, const SamplerConfig& cfg, Rng& rng);

}  // namespace tsforge

#endif  // TSFORGE_SPAN_SAMPLER_HPP_
