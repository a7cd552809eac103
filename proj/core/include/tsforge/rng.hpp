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

#ifndef TSFORGE_RNG_HPP_
#define TSFORGE_RNG_HPP_

#include <cstdint>
#include <random>

namespace tsforge {

/// splitmix64 mixing step (Vigna). Used for seed derivation only.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Independent per-record sub-seed. Records keep their RNG streams regardless
/// of how work is sharded, so thread count never changes the output.
inline std::uint64_t derive_seed(std::uint64_t run_seed, std::uint64_t ordinal) {
  return splitmix64(run_seed ^ splitmix64(ordinal + 1));
}

/// Deterministic generator pinned to this exact construction: std::mt19937_64
/// (fully specified by the standard) with unbiased rejection mapping for
/// bounded draws. std::uniform_int_distribution is implementation-defined and
/// deliberately avoided; outputs here reproduce bit-for-bit across standard
/// libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform on {0, ..., bound-1}. bound must be >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t residual = (~bound + 1) % bound;  // 2^64 mod bound
    std::uint64_t x;
    do {
      x = gen_();
    } while (residual != 0 && x >= (~std::uint64_t{0} - residual + 1));
    return x % bound;
  }

  /// Uniform on the inclusive range {lo, ..., hi}.
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace tsforge

#endif  // TSFORGE_RNG_HPP_
