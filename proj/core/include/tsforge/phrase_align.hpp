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

#ifndef TSFORGE_PHRASE_ALIGN_HPP_
#define TSFORGE_PHRASE_ALIGN_HPP_

#include <optional>
#include <string>
#include <vector>

#include "tsforge/alignment.hpp"
#include "tsforge/span.hpp"
#include "tsforge/token_seq.hpp"

namespace tsforge {

/// An aligned span pair between the MT output and the reference.
struct PhrasePair {
  Span y_span;  // into the MT sentence
  Span r_span;  // into the reference sentence

  bool operator==(const PhrasePair&) const = default;
  auto operator<=>(const PhrasePair&) const = default;
};

/// SMT-style consistency: every link touching a token inside y_span lands
/// inside r_span and vice versa. Unaligned tokens impose no constraint, so
/// the empty alignment is consistent with any spans.
bool is_consistent(const Alignment& alignment, Span y_span, Span r_span);

/// Every MT index in y_span carries at least one link into r_span and every
/// reference index in r_span at least one link from y_span (each row and
/// column of the rectangle has a link).
bool has_full_coverage(const Alignment& alignment, Span y_span, Span r_span);

/// Strips equal leading token pairs, then equal trailing token pairs
/// (exact, case-sensitive string equality). Returns nullopt once either side
/// is fully consumed; otherwise both trimmed spans are non-empty with
/// differing first tokens and differing last tokens.
std::optional<PhrasePair> trim_phrase(const TokenSeq& mt, const TokenSeq& ref,
                                      const PhrasePair& pair);

/// Like trim_phrase but keeps pairs where exactly one side emptied (the
/// surviving side becomes a pure insertion/deletion suggestion). Returns
/// nullopt only when both sides are consumed.
std::optional<PhrasePair> trim_phrase_keep_one_sided(const TokenSeq& mt, const TokenSeq& ref,
                                                     const PhrasePair& pair);

/// All untrimmed containment-maximal span pairs satisfying is_consistent and
/// has_full_coverage, sorted by (y start, y length, r start, r length).
/// A pair is dropped when another satisfying pair strictly contains it on
/// both sides. Works from lengths alone; token text only matters for
/// trimming. Throws DataError when a link is out of bounds.
///
/// Implementation projects each y-span onto its minimal covering r-span
/// instead of scanning all O(n^4) rectangles, so sentences of a few hundred
/// tokens extract in well under a millisecond.
std::vector<PhrasePair> maximal_phrase_pairs(std::size_t mt_len, std::size_t ref_len,
                                             const Alignment& alignment);

struct ExtractOptions {
  bool keep_one_sided = false;
};

/// Full extraction: maximal pairs, trimmed, empties and duplicates dropped,
/// sorted. With keep_one_sided, pairs whose trim empties exactly one side
/// survive as insertion/deletion candidates.
std::vector<PhrasePair> extract_phrases(const TokenSeq& mt, const TokenSeq& ref,
                                        const Alignment& alignment,
                                        const ExtractOptions& options = {});

/// Test oracle: direct enumeration of every (i, j, a, b) rectangle through
/// the public predicates, then the same maximality/trim/sort pipeline.
/// Semantically identical to extract_phrases, quartic runtime.
std::vector<PhrasePair> brute_force_extract(const TokenSeq& mt, const TokenSeq& ref,
                                            const Alignment& alignment,
                                            const ExtractOptions& options = {});

/// Debug dump row: "y[i..j]\tr[a..b]\t<y phrase>\t<r phrase>" with inclusive
/// indices.
std::string dump_phrase(const TokenSeq& mt, const TokenSeq& ref, const PhrasePair& pair);

}  // namespace tsforge

#endif  // TSFORGE_PHRASE_ALIGN_HPP_
