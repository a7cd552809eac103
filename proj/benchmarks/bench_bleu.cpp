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

#include "tsforge/bleu.hpp"
#include "tsforge/rng.hpp"

namespace {

using namespace tsforge;

std::vector<TokenSeq> synthetic_corpus(std::size_t rows, std::uint64_t seed) {
  static const char* pool[] = {"the", "cat", "sat", "on", "a", "mat", "dog", "ran",
                               "fast", "slow", "home", "blue"};
  Rng rng(seed);
  std::vector<TokenSeq> corpus;
  corpus.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<std::string> tokens;
    const std::size_t n = rng.between(8, 30);
    for (std::size_t k = 0; k < n; ++k) tokens.push_back(pool[rng.below(12)]);
    corpus.push_back(TokenSeq(std::move(tokens)));
  }
  return corpus;
}

void BM_CorpusBleu(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  const auto hyps = synthetic_corpus(rows, 1);
  const auto refs = synthetic_corpus(rows, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(corpus_bleu(hyps, refs));
  }
}
BENCHMARK(BM_CorpusBleu)->Arg(100)->Arg(1000)->Arg(10000);

}  // namespace
