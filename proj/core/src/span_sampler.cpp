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

#include "tsforge/span_sampler.hpp"

#include <algorithm>
#include <vector>

#include "tsforge/errors.hpp"

namespace tsforge {

namespace {

Span sample_span_in(std::size_t n, Rng& rng, std::size_t min_len, std::size_t max_len) {
  if (n == 0) throw DataError("cannot sample a span on an empty sequence");
  const std::size_t lo = std::clamp<std::size_t>(min_len, 1, n);
  const std::size_t hi = std::clamp<std::size_t>(max_len, lo, n);
  // Length first, then start; the draw order is part of the reproducibility
  // contract for golden outputs.
  const std::size_t len = static_cast<std::size_t>(rng.between(lo, hi));
  const std::size_t start = static_cast<std::size_t>(rng.between(0, n - len));
  return Span{start, len};
}

TSExample make_example(const ParallelPair& pair, const SamplerConfig& cfg, Rng& rng,
                       Origin origin) {
  if (pair.reference.empty()) throw DataError("pair has an empty target side");
  if (pair.source.contains(cfg.mask_token)) {
    throw DataError("mask token \"" + cfg.mask_token + "\" occurs in the source sentence");
  }
  const Span span = sample_span(pair.reference.size(), rng, cfg);
  MaskedSentence masked = apply_mask(pair.reference, span, cfg.mask_token);
  TSExample example;
  example.source = pair.source;
  example.masked_target = std::move(masked.masked);
  example.label = std::move(masked.label);
  example.origin = origin;
  return example;
}

}  // namespace

Span sample_span(std::size_t n, Rng& rng) { return sample_span_in(n, rng, 1, n); }

Span sample_span(std::size_t n, Rng& rng, const SamplerConfig& cfg) {
  return sample_span_in(n, rng, cfg.min_span_len.value_or(1), cfg.max_span_len.value_or(n));
}

MaskedSentence apply_mask(const TokenSeq& seq, Span span, std::string_view mask_token) {
  if (span.len == 0) throw DataError("mask span must cover at least one token");
  if (span.end() > seq.size()) {
    throw DataError("mask span [" + std::to_string(span.start) + ", " +
                    std::to_string(span.end()) + ") out of bounds for length " +
                    std::to_string(seq.size()));
  }
  if (seq.contains(mask_token)) {
    throw DataError("mask token \"" + std::string(mask_token) +
                    "\" already occurs in the sentence");
  }
  std::vector<std::string> masked;
  masked.reserve(seq.size() - span.len + 1);
  std::vector<std::string> label;
  label.reserve(span.len);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i == span.start) masked.emplace_back(mask_token);
    if (span.covers(i)) {
      label.push_back(seq[i]);
    } else {
      masked.push_back(seq[i]);
    }
  }
  return MaskedSentence{TokenSeq(std::move(masked)), TokenSeq(std::move(label)), span};
}

TokenSeq splice_mask(const TokenSeq& masked, std::string_view mask_token,
                     const TokenSeq& replacement) {
  const auto& tokens = masked.tokens();
  const auto count = std::count(tokens.begin(), tokens.end(), mask_token);
  if (count != 1) {
    throw DataError("expected exactly one mask token, found " + std::to_string(count));
  }
  std::vector<std::string> out;
  out.reserve(tokens.size() - 1 + replacement.size());
  for (const auto& t : tokens) {
    if (t == mask_token) {
      out.insert(out.end(), replacement.begin(), replacement.end());
    } else {
      out.push_back(t);
    }
  }
  return TokenSeq(std::move(out));
}

TSExample make_golden_example(const ParallelPair& pair, const SamplerConfig& cfg, Rng& rng) {
  return make_example(pair, cfg, rng, Origin::golden);
}

TSExample make_pseudo_example(const ParallelPair& pair, const SamplerConfig& cfg, Rng& rng) {
  return make_example(pair, cfg, rng, Origin::pseudo);
}

}  // namespace tsforge
