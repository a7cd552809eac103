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

#include <benchmark/benchmark.h>

#include <vector>

#include "tsforge/phrase_align.hpp"
#include "tsforge/rng.hpp"

namespace {

using namespace tsforge;

// Noisy mostly-diagonal alignment, the shape fast_align produces on real MT
// output: diagonal links with gaps, occasional one-to-many fans.
Alignment noisy_diagonal(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Link> links;
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.below(10) == 0) continue;  // unaligned token
    const std::size_t jitter = rng.below(3);
    const std::size_t target = std::min(n - 1, i + jitter >= 1 ? i + jitter - 1 : 0);
    links.push_back({i, target});
    if (rng.below(8) == 0 && target + 1 < n) links.push_back({i, target + 1});
  }
  return Alignment(std::move(links));
}

TokenSeq synthetic_sentence(std::size_t n, const char* prefix) {
  std::vector<std::string> tokens;
  tokens.reserve(n);
  for (std::size_t i = 0; i < n; ++i) tokens.push_back(prefix + std::to_string(i % 50));
  return TokenSeq(std::move(tokens));
}

void BM_MaximalPhrasePairs(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Alignment alignment = noisy_diagonal(n, 1234);
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximal_phrase_pairs(n, n, alignment));
  }
}
BENCHMARK(BM_MaximalPhrasePairs)->Arg(25)->Arg(50)->Arg(100)->Arg(200);

void BM_ExtractPhrases(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Alignment alignment = noisy_diagonal(n, 99);
  const TokenSeq mt = synthetic_sentence(n, "m");
  const TokenSeq ref = synthetic_sentence(n, "r");
  for (auto _ : state) {
    benchmark::DoNotOptimize(extract_phrases(mt, ref, alignment));
  }
}
BENCHMARK(BM_ExtractPhrases)->Arg(50)->Arg(200);

void BM_BruteForceExtract(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Alignment alignment = noisy_diagonal(n, 7);
  const TokenSeq mt = synthetic_sentence(n, "m");
  const TokenSeq ref = synthetic_sentence(n, "r");
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_extract(mt, ref, alignment));
  }
}
BENCHMARK(BM_BruteForceExtract)->Arg(8)->Arg(16);

}  // namespace
