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

#include "tsforge/alignment.hpp"

#include <algorithm>
#include <charconv>

#include "tsforge/errors.hpp"

namespace tsforge {

namespace {

void normalize(std::vector<Link>& links) {
  std::sort(links.begin(), links.end());
  links.erase(std::unique(links.begin(), links.end()), links.end());
}

bool parse_index(std::string_view text, std::size_t& out) {
  if (text.empty()) return false;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, out);
  return res.ec == std::errc{} && res.ptr == last;
}

}  // namespace

Alignment::Alignment(std::vector<Link> links) : links_(std::move(links)) {
  normalize(links_);
}

bool Alignment::contains(const Link& link) const {
  return std::binary_search(links_.begin(), links_.end(), link);
}

void Alignment::add(const Link& link) {
  const auto it = std::lower_bound(links_.begin(), links_.end(), link);
  if (it == links_.end() || *it != link) links_.insert(it, link);
}

std::size_t Alignment::max_mt() const {
  std::size_t m = 0;
  for (const auto& l : links_) m = std::max(m, l.mt);
  return m;
}

std::size_t Alignment::max_ref() const {
  std::size_t m = 0;
  for (const auto& l : links_) m = std::max(m, l.ref);
  return m;
}

Alignment parse_alignment(std::string_view line, std::size_t line_no) {
  std::vector<Link> links;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    const std::string_view tok = line.substr(pos, end - pos);
    pos = end;

    const std::size_t dash = tok.find('-');
    Link link;
    if (dash == std::string_view::npos || !parse_index(tok.substr(0, dash), link.mt) ||
        !parse_index(tok.substr(dash + 1), link.ref)) {
      throw DataError("line " + std::to_string(line_no) + ": malformed alignment link \"" +
                      std::string(tok) + "\" (expected <uint>-<uint>)");
    }
    links.push_back(link);
  }
  return Alignment(std::move(links));
}

std::string serialize_alignment(const Alignment& alignment) {
  std::string out;
  for (const auto& l : alignment.links()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l.mt);
    out += '-';
    out += std::to_string(l.ref);
  }
  return out;
}

void check_alignment_bounds(const Alignment& alignment, std::size_t mt_len,
                            std::size_t ref_len) {
  for (const auto& l : alignment.links()) {
    if (l.mt >= mt_len || l.ref >= ref_len) {
      throw DataError("alignment link " + std::to_string(l.mt) + "-" + std::to_string(l.ref) +
                      " out of bounds for lengths (" + std::to_string(mt_len) + ", " +
                      std::to_string(ref_len) + ")");
    }
  }
}

}  // namespace tsforge
