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

#include "tsforge/bleu.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_map>

#include "tsforge/corpus_io.hpp"
#include "tsforge/errors.hpp"

namespace tsforge {

namespace {

constexpr std::size_t kMaxOrder = 4;

// n-grams as joined strings; '\x1F' cannot occur inside tokens in practice
// and keys are local to one call.
void count_ngrams(const TokenSeq& seq, std::size_t n,
                  std::unordered_map<std::string, std::size_t>& counts) {
  if (seq.size() < n) return;
  for (std::size_t i = 0; i + n <= seq.size(); ++i) {
    std::string key = seq[i];
    for (std::size_t k = 1; k < n; ++k) {
      key += '\x1F';
      key += seq[i + k];
    }
    ++counts[key];
  }
}

BleuScore score_from_counts(const std::array<std::size_t, kMaxOrder>& matched,
                            const std::array<std::size_t, kMaxOrder>& total,
                            std::size_t hyp_len, std::size_t ref_len,
                            std::size_t smoothing_add) {
  BleuScore result;
  result.hyp_len = hyp_len;
  result.ref_len = ref_len;

  double log_sum = 0.0;
  bool zero = false;
  for (std::size_t n = 0; n < kMaxOrder; ++n) {
    // First order is never smoothed; a corpus with zero unigram overlap
    // scores zero in both modes.
    const std::size_t add = n == 0 ? 0 : smoothing_add;
    const double m = static_cast<double>(matched[n] + add);
    const double t = static_cast<double>(total[n] + add);
    if (t == 0.0) {
      // No n-grams of this order exist anywhere; vacuously perfect.
      result.precisions[n] = 1.0;
      continue;
    }
    const double p = m / t;
    result.precisions[n] = p;
    if (p == 0.0) {
      zero = true;
    } else {
      log_sum += std::log(p);
    }
  }

  if (hyp_len == 0) {
    result.brevity_penalty = 0.0;
  } else if (hyp_len >= ref_len) {
    result.brevity_penalty = 1.0;
  } else {
    result.brevity_penalty =
        std::exp(1.0 - static_cast<double>(ref_len) / static_cast<double>(hyp_len));
  }

  result.score = zero || hyp_len == 0
                     ? 0.0
                     : 100.0 * result.brevity_penalty *
                           std::exp(log_sum / static_cast<double>(kMaxOrder));
  return result;
}

}  // namespace

std::string BleuScore::to_string() const {
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "BLEU = %.2f %.1f/%.1f/%.1f/%.1f (BP = %.3f, hyp_len = %zu, ref_len = %zu)",
                score, 100.0 * precisions[0], 100.0 * precisions[1], 100.0 * precisions[2],
                100.0 * precisions[3], brevity_penalty, hyp_len, ref_len);
  return buf;
}

void BleuAccumulator::add(const TokenSeq& hyp, const TokenSeq& ref) {
  hyp_len_ += hyp.size();
  ref_len_ += ref.size();
  ++pairs_;
  for (std::size_t n = 1; n <= kMaxOrder; ++n) {
    std::unordered_map<std::string, std::size_t> hyp_counts;
    std::unordered_map<std::string, std::size_t> ref_counts;
    count_ngrams(hyp, n, hyp_counts);
    count_ngrams(ref, n, ref_counts);
    for (const auto& [gram, count] : hyp_counts) {
      total_[n - 1] += count;
      const auto it = ref_counts.find(gram);
      if (it != ref_counts.end()) {
        matched_[n - 1] += std::min(count, it->second);  // clipped
      }
    }
  }
}

BleuScore BleuAccumulator::finish() const {
  if (pairs_ == 0) throw DataError("corpus BLEU needs at least one sentence pair");
  return score_from_counts(matched_, total_, hyp_len_, ref_len_, 0);
}

BleuScore corpus_bleu(std::span<const TokenSeq> hyps, std::span<const TokenSeq> refs) {
  if (hyps.size() != refs.size()) {
    throw DataError("corpus BLEU needs matched lists, got " + std::to_string(hyps.size()) +
                    " hypotheses vs " + std::to_string(refs.size()) + " references");
  }
  BleuAccumulator acc;
  for (std::size_t i = 0; i < hyps.size(); ++i) acc.add(hyps[i], refs[i]);
  return acc.finish();
}

BleuScore sentence_bleu(const TokenSeq& hyp, const TokenSeq& ref) {
  std::array<std::size_t, kMaxOrder> matched{};
  std::array<std::size_t, kMaxOrder> total{};
  std::unordered_map<std::string, std::size_t> hyp_counts, ref_counts;
  for (std::size_t n = 1; n <= kMaxOrder; ++n) {
    hyp_counts.clear();
    ref_counts.clear();
    count_ngrams(hyp, n, hyp_counts);
    count_ngrams(ref, n, ref_counts);
    for (const auto& [gram, count] : hyp_counts) {
      total[n - 1] += count;
      const auto it = ref_counts.find(gram);
      if (it != ref_counts.end()) matched[n - 1] += std::min(count, it->second);
    }
  }
  return score_from_counts(matched, total, hyp.size(), ref.size(), 1);
}

TokenSeq parse_hypothesis_row(std::string_view row, std::size_t line_no) {
  if (row.empty()) {
    throw DataError("line " + std::to_string(line_no) + ": hypothesis row has no candidates");
  }
  const std::size_t sep = row.find(" ||| ");
  return tokenize(sep == std::string_view::npos ? row : row.substr(0, sep));
}

std::vector<TokenSeq> read_hypothesis_file(const std::string& path) {
  LineReader reader(path);
  std::vector<TokenSeq> top1;
  std::string line;
  while (reader.next(line)) {
    try {
      top1.push_back(parse_hypothesis_row(line, reader.line_no()));
    } catch (const DataError& e) {
      throw DataError(path + ": " + e.what());
    }
  }
  return top1;
}

std::vector<TokenSeq> read_gold_file(const std::string& path) {
  LineReader reader(path);
  std::vector<TokenSeq> gold;
  std::string line;
  while (reader.next(line)) gold.push_back(tokenize(line));
  return gold;
}

BleuScore evaluate_topk(const std::string& hyp_path, const std::string& gold_path) {
  LineReader hyps(hyp_path);
  LineReader gold(gold_path);
  BleuAccumulator acc;
  std::string hyp_line;
  std::string gold_line;
  bool mismatch = false;
  while (true) {
    const bool have_hyp = hyps.next(hyp_line);
    const bool have_gold = gold.next(gold_line);
    if (have_hyp != have_gold) {
      mismatch = true;  // keep draining both to report full counts
      while (hyps.next(hyp_line)) {
      }
      while (gold.next(gold_line)) {
      }
      break;
    }
    if (!have_hyp) break;
    TokenSeq top1;
    try {
      top1 = parse_hypothesis_row(hyp_line, hyps.line_no());
    } catch (const DataError& e) {
      throw DataError(hyp_path + ": " + e.what());
    }
    acc.add(top1, tokenize(gold_line));
  }
  if (mismatch) {
    throw DataError("row count mismatch: " + hyp_path + " has " +
                    std::to_string(hyps.line_no()) + " rows, " + gold_path + " has " +
                    std::to_string(gold.line_no()) + " rows");
  }
  return acc.finish();
}

}  // namespace tsforge
