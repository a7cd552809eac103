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

#ifndef TSFORGE_SPAN_HPP_
#define TSFORGE_SPAN_HPP_

#include <compare>
#include <cstddef>

namespace tsforge {

/// Contiguous token range, half-open: covers indices [start, start + len).
struct Span {
  std::size_t start = 0;
  std::size_t len = 0;

  std::size_t end() const { return start + len; }
  bool empty() const { return len == 0; }

  bool covers(std::size_t index) const { return index >= start && index < end(); }

  bool contains(const Span& other) const {
    return other.start >= start && other.end() <= end();
  }

  bool strictly_contains(const Span& other) const {
    return contains(other) && !(*this == other);
  }

  bool operator==(const Span&) const = default;
  auto operator<=>(const Span&) const = default;
};

/// Converts an inclusive index pair i..j (j >= i) to a half-open span.
inline Span span_from_inclusive(std::size_t i, std::size_t j) {
  return Span{i, j - i + 1};
}

}  // namespace tsforge

#endif  // TSFORGE_SPAN_HPP_
