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

#include "tsforge/phrase_align.hpp"

#include <algorithm>
#include <limits>

#include "tsforge/errors.hpp"

namespace tsforge {

namespace {

void check_pair_bounds(const TokenSeq& mt, const TokenSeq& ref, const PhrasePair& pair) {
  if (pair.y_span.end() > mt.size() || pair.r_span.end() > ref.size()) {
    throw DataError("phrase pair out of bounds for sentence lengths (" +
                    std::to_string(mt.size()) + ", " + std::to_string(ref.size()) + ")");
  }
}

// Trims but keeps spans that emptied; callers decide which empties survive.
PhrasePair trim_raw(const TokenSeq& mt, const TokenSeq& ref, const PhrasePair& pair) {
  std::size_t yb = pair.y_span.start, ye = pair.y_span.end();
  std::size_t rb = pair.r_span.start, re = pair.r_span.end();
  while (yb < ye && rb < re && mt[yb] == ref[rb]) {
    ++yb;
    ++rb;
  }
  while (yb < ye && rb < re && mt[ye - 1] == ref[re - 1]) {
    --ye;
    --re;
  }
  return PhrasePair{Span{yb, ye - yb}, Span{rb, re - rb}};
}

void finish(std::vector<PhrasePair>& pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

std::vector<PhrasePair> trim_all(const TokenSeq& mt, const TokenSeq& ref,
                                 std::vector<PhrasePair> pairs, const ExtractOptions& options) {
  std::vector<PhrasePair> out;
  out.reserve(pairs.size());
  for (const auto& pair : pairs) {
    const auto trimmed = options.keep_one_sided
                             ? trim_phrase_keep_one_sided(mt, ref, pair)
                             : trim_phrase(mt, ref, pair);
    if (trimmed) out.push_back(*trimmed);
  }
  finish(out);
  return out;
}

}  // namespace

bool is_consistent(const Alignment& alignment, Span y_span, Span r_span) {
  // A link may either touch both spans or neither; anything crossing the
  // rectangle border in one direction breaks consistency.
  for (const auto& link : alignment.links()) {
    if (y_span.covers(link.mt) != r_span.covers(link.ref)) return false;
  }
  return true;
}

bool has_full_coverage(const Alignment& alignment, Span y_span, Span r_span) {
  if (y_span.empty() || r_span.empty()) return false;
  std::vector<bool> row_hit(y_span.len, false);
  std::vector<bool> col_hit(r_span.len, false);
  for (const auto& link : alignment.links()) {
    if (y_span.covers(link.mt) && r_span.covers(link.ref)) {
      row_hit[link.mt - y_span.start] = true;
      col_hit[link.ref - r_span.start] = true;
    }
  }
  return std::find(row_hit.begin(), row_hit.end(), false) == row_hit.end() &&
         std::find(col_hit.begin(), col_hit.end(), false) == col_hit.end();
}

std::optional<PhrasePair> trim_phrase(const TokenSeq& mt, const TokenSeq& ref,
                                      const PhrasePair& pair) {
  check_pair_bounds(mt, ref, pair);
  const PhrasePair trimmed = trim_raw(mt, ref, pair);
  if (trimmed.y_span.empty() || trimmed.r_span.empty()) return std::nullopt;
  return trimmed;
}

std::optional<PhrasePair> trim_phrase_keep_one_sided(const TokenSeq& mt, const TokenSeq& ref,
                                                     const PhrasePair& pair) {
  check_pair_bounds(mt, ref, pair);
  const PhrasePair trimmed = trim_raw(mt, ref, pair);
  if (trimmed.y_span.empty() && trimmed.r_span.empty()) return std::nullopt;
  return trimmed;
}

std::vector<PhrasePair> maximal_phrase_pairs(std::size_t mt_len, std::size_t ref_len,
                                             const Alignment& alignment) {
  check_alignment_bounds(alignment, mt_len, ref_len);
  if (alignment.empty() || mt_len == 0 || ref_len == 0) return {};

  std::vector<std::vector<std::size_t>> row_cols(mt_len);
  std::vector<std::size_t> col_min_row(ref_len, std::numeric_limits<std::size_t>::max());
  std::vector<std::size_t> col_max_row(ref_len, 0);
  for (const auto& link : alignment.links()) {
    row_cols[link.mt].push_back(link.ref);
    col_min_row[link.ref] = std::min(col_min_row[link.ref], link.mt);
    col_max_row[link.ref] = std::max(col_max_row[link.ref], link.mt);
  }

  // For each y-span the only viable r-span is the hull of its projected
  // links; record the widest accepted rectangle per start row.
  struct Candidate {
    std::size_t i, j, a, b;  // inclusive rows i..j, cols a..b
  };
  std::vector<Candidate> best_per_start;
  std::vector<std::size_t> col_count(ref_len, 0);
  std::vector<std::size_t> touched;

  for (std::size_t i = 0; i < mt_len; ++i) {
    if (row_cols[i].empty()) continue;  // row i can never be covered
    std::size_t min_col = std::numeric_limits<std::size_t>::max();
    std::size_t max_col = 0;
    std::size_t distinct = 0;
    bool found = false;
    Candidate cand{};
    touched.clear();

    for (std::size_t j = i; j < mt_len; ++j) {
      if (row_cols[j].empty()) break;  // any longer span contains row j
      for (const std::size_t c : row_cols[j]) {
        if (col_count[c]++ == 0) {
          ++distinct;
          touched.push_back(c);
        }
        min_col = std::min(min_col, c);
        max_col = std::max(max_col, c);
      }
      // Column coverage of the hull == contiguity of the projected columns.
      if (distinct != max_col - min_col + 1) continue;
      // Reverse consistency: nothing outside rows i..j links into the hull.
      bool ok = true;
      for (std::size_t c = min_col; c <= max_col; ++c) {
        if (col_min_row[c] < i || col_max_row[c] > j) {
          ok = false;
          break;
        }
      }
      if (ok) {
        cand = Candidate{i, j, min_col, max_col};
        found = true;  // keep only the widest j for this start
      }
    }
    for (const std::size_t c : touched) col_count[c] = 0;
    if (found) best_per_start.push_back(cand);
  }

  // Containment-maximality. Accepted rectangles nested on the y side are
  // nested on the r side as well, so a start-ascending sweep over end rows
  // finds every survivor.
  std::vector<PhrasePair> out;
  std::size_t best_j = 0;
  bool have_prev = false;
  for (const auto& c : best_per_start) {  // starts strictly increasing
    if (have_prev && c.j <= best_j) continue;
    out.push_back(PhrasePair{span_from_inclusive(c.i, c.j), span_from_inclusive(c.a, c.b)});
    best_j = c.j;
    have_prev = true;
  }
  return out;
}

std::vector<PhrasePair> extract_phrases(const TokenSeq& mt, const TokenSeq& ref,
                                        const Alignment& alignment,
                                        const ExtractOptions& options) {
  return trim_all(mt, ref, maximal_phrase_pairs(mt.size(), ref.size(), alignment), options);
}

std::vector<PhrasePair> brute_force_extract(const TokenSeq& mt, const TokenSeq& ref,
                                            const Alignment& alignment,
                                            const ExtractOptions& options) {
  check_alignment_bounds(alignment, mt.size(), ref.size());
  std::vector<PhrasePair> satisfying;
  for (std::size_t i = 0; i < mt.size(); ++i) {
    for (std::size_t j = i; j < mt.size(); ++j) {
      for (std::size_t a = 0; a < ref.size(); ++a) {
        for (std::size_t b = a; b < ref.size(); ++b) {
          const PhrasePair pair{span_from_inclusive(i, j), span_from_inclusive(a, b)};
          if (is_consistent(alignment, pair.y_span, pair.r_span) &&
              has_full_coverage(alignment, pair.y_span, pair.r_span)) {
            satisfying.push_back(pair);
          }
        }
      }
    }
  }
  std::vector<PhrasePair> maximal;
  for (const auto& p : satisfying) {
    const bool dominated = std::any_of(
        satisfying.begin(), satisfying.end(), [&](const PhrasePair& q) {
          return q.y_span.strictly_contains(p.y_span) && q.r_span.strictly_contains(p.r_span);
        });
    if (!dominated) maximal.push_back(p);
  }
  return trim_all(mt, ref, std::move(maximal), options);
}

std::string dump_phrase(const TokenSeq& mt, const TokenSeq& ref, const PhrasePair& pair) {
  check_pair_bounds(mt, ref, pair);
  auto render = [](char side, const Span& span) {
    std::string out(1, side);
    out += '[';
    out += std::to_string(span.start);
    out += "..";
    // Inclusive upper index; empty spans print start-1 (possibly -1).
    out += std::to_string(static_cast<long long>(span.end()) - 1);
    out += ']';
    return out;
  };
  auto text = [](const TokenSeq& seq, const Span& span) {
    std::string out;
    for (std::size_t k = span.start; k < span.end(); ++k) {
      if (k > span.start) out += ' ';
      out += seq[k];
    }
    return out;
  };
  return render('y', pair.y_span) + '\t' + render('r', pair.r_span) + '\t' +
         text(mt, pair.y_span) + '\t' + text(ref, pair.r_span);
}

}  // namespace tsforge
