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

#include "tsforge/token_seq.hpp"

#include <algorithm>

#include "tsforge/errors.hpp"
#include "tsforge/unicode.hpp"

namespace tsforge {

bool is_valid_token(std::string_view token) {
  if (token.empty()) return false;
  std::size_t i = 0;
  while (i < token.size()) {
    if (uni::is_space(uni::decode(token, i))) return false;
  }
  return true;
}

TokenSeq::TokenSeq(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  for (const auto& t : tokens_) {
    if (!is_valid_token(t)) {
      throw DataError("invalid token \"" + t + "\": tokens must be non-empty and whitespace-free");
    }
  }
}

bool TokenSeq::contains(std::string_view token) const {
  return std::find(tokens_.begin(), tokens_.end(), token) != tokens_.end();
}

std::string TokenSeq::joined() const {
  std::string out;
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (i > 0) out += ' ';
    out += tokens_[i];
  }
  return out;
}

TokenSeq tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  std::size_t token_start = 0;
  bool in_token = false;
  while (i < text.size()) {
    const std::size_t cp_start = i;
    const bool space = uni::is_space(uni::decode(text, i));
    if (space) {
      if (in_token) {
        tokens.emplace_back(text.substr(token_start, cp_start - token_start));
        in_token = false;
      }
    } else if (!in_token) {
      token_start = cp_start;
      in_token = true;
    }
  }
  if (in_token) tokens.emplace_back(text.substr(token_start));
  return TokenSeq(TokenSeq::Unchecked{}, std::move(tokens));
}

}  // namespace tsforge
