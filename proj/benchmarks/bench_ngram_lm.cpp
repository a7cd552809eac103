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

#include "tsforge/ngram_lm.hpp"
#include "tsforge/rng.hpp"

namespace {

using namespace tsforge;

TokenSeq sentence(Rng& rng, std::size_t len) {
  static const char* pool[] = {"the", "system", "collects", "all", "revenue", "monthly",
                               "and", "reports", "totals", "per", "account"};
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < len; ++i) tokens.push_back(pool[rng.below(11)]);
  return TokenSeq(std::move(tokens));
}

void BM_NgramScore(benchmark::State& state) {
  Rng rng(5);
  NgramLM lm(static_cast<std::size_t>(state.range(0)), 0.1);
  for (int i = 0; i < 2000; ++i) lm.add_sentence(sentence(rng, 15));
  const TokenSeq query = sentence(rng, 25);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lm.mean_nll(query));
  }
}
BENCHMARK(BM_NgramScore)->Arg(2)->Arg(3);

void BM_NgramTrain(benchmark::State& state) {
  Rng rng(6);
  std::vector<TokenSeq> corpus;
  for (int i = 0; i < 1000; ++i) corpus.push_back(sentence(rng, 15));
  for (auto _ : state) {
    NgramLM lm(3, 0.1);
    lm.train(corpus);
    benchmark::DoNotOptimize(lm.vocab_size());
  }
}
BENCHMARK(BM_NgramTrain);

}  // namespace
