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

#ifndef TSFORGE_PARALLEL_HPP_
#define TSFORGE_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace tsforge {

/// Runs fn(i) for every i in [0, count) across `threads` workers with a
/// static partition. Results must be written to per-index slots; the caller
/// merges them in input order afterwards, which keeps output bytes identical
/// for any thread count. The first exception thrown by a worker is rethrown
/// after all workers joined.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace tsforge

#endif  // TSFORGE_PARALLEL_HPP_
