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

#include "tsforge/rng.hpp"
#include "tsforge/span_sampler.hpp"

namespace {

using namespace tsforge;

void BM_SampleSpan(benchmark::State& state) {
  Rng rng(42);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_span(n, rng));
  }
}
BENCHMARK(BM_SampleSpan)->Arg(10)->Arg(80);

void BM_GoldenExample(benchmark::State& state) {
  std::vector<std::string> src(30, "quelle"), ref;
  for (int i = 0; i < 30; ++i) ref.push_back("tok" + std::to_string(i));
  const ParallelPair pair{TokenSeq(src), TokenSeq(ref)};
  const SamplerConfig cfg;
  Rng rng(42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(make_golden_example(pair, cfg, rng));
  }
}
BENCHMARK(BM_GoldenExample);

}  // namespace
