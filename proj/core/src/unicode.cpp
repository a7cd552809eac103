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

#include "tsforge/unicode.hpp"

namespace tsforge::uni {

namespace {
constexpr char32_t kReplacement = 0xFFFD;

inline bool is_continuation(unsigned char b) { return (b & 0xC0) == 0x80; }
}  // namespace

char32_t decode(std::string_view s, std::size_t& i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  if ((b0 & 0xE0) == 0xC0 && i + 1 < s.size() && is_continuation(s[i + 1])) {
    const char32_t cp = (char32_t(b0 & 0x1F) << 6) | (s[i + 1] & 0x3F);
    i += 2;
    return cp >= 0x80 ? cp : kReplacement;
  }
  if ((b0 & 0xF0) == 0xE0 && i + 2 < s.size() && is_continuation(s[i + 1]) &&
      is_continuation(s[i + 2])) {
    const char32_t cp = (char32_t(b0 & 0x0F) << 12) |
                        (char32_t(s[i + 1] & 0x3F) << 6) | (s[i + 2] & 0x3F);
    i += 3;
    return cp >= 0x800 ? cp : kReplacement;
  }
  if ((b0 & 0xF8) == 0xF0 && i + 3 < s.size() && is_continuation(s[i + 1]) &&
      is_continuation(s[i + 2]) && is_continuation(s[i + 3])) {
    const char32_t cp = (char32_t(b0 & 0x07) << 18) |
                        (char32_t(s[i + 1] & 0x3F) << 12) |
                        (char32_t(s[i + 2] & 0x3F) << 6) | (s[i + 3] & 0x3F);
    i += 4;
    return (cp >= 0x10000 && cp <= 0x10FFFF) ? cp : kReplacement;
  }
  ++i;
  return kReplacement;
}

bool is_space(char32_t c) {
  switch (c) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D:
    case 0x20:
    case 0x85:
    case 0xA0:
    case 0x1680:
    case 0x2028: case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

Script script_of(char32_t c) {
  // Latin letters.
  if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z')) return Script::latin;
  if (c >= 0xC0 && c <= 0x24F && c != 0xD7 && c != 0xF7) return Script::latin;
  if (c >= 0x1E00 && c <= 0x1EFF) return Script::latin;  // Latin Extended Additional
  // Han ideographs.
  if (c >= 0x4E00 && c <= 0x9FFF) return Script::cjk;    // CJK Unified
  if (c >= 0x3400 && c <= 0x4DBF) return Script::cjk;    // Extension A
  if (c >= 0xF900 && c <= 0xFAFF) return Script::cjk;    // compatibility ideographs
  // Other letter scripts still count toward the letter total.
  if (c >= 0x370 && c <= 0x3FF) return Script::other;    // Greek
  if (c >= 0x400 && c <= 0x4FF) return Script::other;    // Cyrillic
  if (c >= 0x590 && c <= 0x5FF) return Script::other;    // Hebrew
  if (c >= 0x600 && c <= 0x6FF) return Script::other;    // Arabic
  if (c >= 0x3040 && c <= 0x30FF) return Script::other;  // kana
  if (c >= 0xAC00 && c <= 0xD7AF) return Script::other;  // hangul
  return Script::none;
}

}  // namespace tsforge::uni
