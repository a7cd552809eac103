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

#ifndef TSFORGE_ALIGNMENT_HPP_
#define TSFORGE_ALIGNMENT_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tsforge {

/// One token link: MT token index -> reference token index.
struct Link {
  std::size_t mt = 0;
  std::size_t ref = 0;

  bool operator==(const Link&) const = default;
  auto operator<=>(const Link&) const = default;
};

/// A set of MT->reference token links. Duplicates collapse; links are kept
/// sorted so equality is set equality.
class Alignment {
 public:
  Alignment() = default;
  explicit Alignment(std::vector<Link> links);

  const std::vector<Link>& links() const { return links_; }
  std::size_t size() const { return links_.size(); }
  bool empty() const { return links_.empty(); }

  bool contains(const Link& link) const;

  /// Inserts a link, preserving set semantics.
  void add(const Link& link);

  /// Largest indices present, for bounds validation. Zero when empty.
  std::size_t max_mt() const;
  std::size_t max_ref() const;

  bool operator==(const Alignment&) const = default;

 private:
  std::vector<Link> links_;  // sorted, unique
};

/// Parses fast_align-style "i-a" links, whitespace separated. Order is
/// irrelevant and duplicates collapse. Throws DataError naming the offending
/// token and line number for malformed input.
Alignment parse_alignment(std::string_view line, std::size_t line_no = 0);

/// Space-joined "i-a" links in sorted order. Round-trips through parse_alignment.
std::string serialize_alignment(const Alignment& alignment);

/// Throws DataError if any link exceeds the given sequence lengths.
void check_alignment_bounds(const Alignment& alignment, std::size_t mt_len,
                            std::size_t ref_len);

}  // namespace tsforge

#endif  // TSFORGE_ALIGNMENT_HPP_
