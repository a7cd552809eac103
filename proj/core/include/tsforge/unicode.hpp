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

#ifndef TSFORGE_UNICODE_HPP_
#define TSFORGE_UNICODE_HPP_

#include <cstddef>
#include <string_view>

namespace tsforge::uni {

/// Decodes the UTF-8 code point starting at s[i] and advances i past it.
/// Malformed bytes decode to U+FFFD and consume a single byte.
char32_t decode(std::string_view s, std::size_t& i);

/// Unicode whitespace (the White_Space property set: ASCII space/tabs/newlines,
/// NBSP, the U+2000 block, ideographic space, ...).
bool is_space(char32_t c);

/// Coarse script class used by the reference language-id heuristic.
enum class Script {
  latin,   // Basic Latin letters plus Latin-1/Extended letter ranges
  cjk,     // CJK Unified Ideographs (incl. Extension A and compatibility block)
  other,   // other letter-like scripts (Greek, Cyrillic, Arabic, kana, hangul, ...)
  none,    // digits, punctuation, symbols, whitespace
};

Script script_of(char32_t c);

}  // namespace tsforge::uni

#endif  // TSFORGE_UNICODE_HPP_
