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

#include "tsforge/filters.hpp"

#include "tsforge/errors.hpp"
#include "tsforge/unicode.hpp"

namespace tsforge {

void validate_bounds(const LengthBounds& bounds) {
  if (bounds.min_tokens < 1 || bounds.min_tokens > bounds.max_tokens) {
    throw ConfigError("invalid length bounds: need 1 <= min(" +
                      std::to_string(bounds.min_tokens) + ") <= max(" +
                      std::to_string(bounds.max_tokens) + ")");
  }
}

bool within_bounds(const TokenSeq& seq, const LengthBounds& bounds) {
  return seq.size() >= bounds.min_tokens && seq.size() <= bounds.max_tokens;
}

bool length_filter(const ParallelPair& pair, const LengthBounds& bounds) {
  return within_bounds(pair.source, bounds) && within_bounds(pair.reference, bounds);
}

LangTag lang_from_string(std::string_view tag) {
  if (tag == "en") return LangTag::en;
  if (tag == "de") return LangTag::de;
  if (tag == "zh") return LangTag::zh;
  throw ConfigError("unsupported language tag \"" + std::string(tag) +
                    "\" (reference LID supports en, de, zh)");
}

std::string_view to_string(LangTag tag) {
  switch (tag) {
    case LangTag::en: return "en";
    case LangTag::de: return "de";
    case LangTag::zh: return "zh";
  }
  return "en";
}

bool language_id_filter(const TokenSeq& seq, LangTag expected) {
  const uni::Script want =
      (expected == LangTag::zh) ? uni::Script::cjk : uni::Script::latin;
  std::size_t letters = 0;
  std::size_t matching = 0;
  for (const auto& token : seq) {
    std::size_t i = 0;
    while (i < token.size()) {
      const uni::Script s = uni::script_of(uni::decode(token, i));
      if (s == uni::Script::none) continue;
      ++letters;
      if (s == want) ++matching;
    }
  }
  if (letters == 0) return false;
  return 2 * matching >= letters;  // ratio >= 0.5 without float drift
}

}  // namespace tsforge
