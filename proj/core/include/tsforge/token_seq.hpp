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

#ifndef TSFORGE_TOKEN_SEQ_HPP_
#define TSFORGE_TOKEN_SEQ_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tsforge {

/// An immutable tokenized sentence. Tokens are non-empty UTF-8 strings with no
/// internal whitespace; the constructor rejects anything else.
class TokenSeq {
 public:
  TokenSeq() = default;

  /// Validates every token (non-empty, whitespace-free). Throws DataError.
  explicit TokenSeq(std::vector<std::string> tokens);

  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  const std::string& operator[](std::size_t i) const { return tokens_[i]; }

  auto begin() const { return tokens_.begin(); }
  auto end() const { return tokens_.end(); }

  const std::vector<std::string>& tokens() const { return tokens_; }

  bool contains(std::string_view token) const;

  /// Tokens joined with single spaces.
  std::string joined() const;

  bool operator==(const TokenSeq&) const = default;
  auto operator<=>(const TokenSeq&) const = default;

 private:
  struct Unchecked {};
  TokenSeq(Unchecked, std::vector<std::string> tokens)
      : tokens_(std::move(tokens)) {}

  friend TokenSeq tokenize(std::string_view);

  std::vector<std::string> tokens_;
};

/// Splits on runs of Unicode whitespace; all other bytes pass through
/// verbatim. Empty input yields an empty sequence.
TokenSeq tokenize(std::string_view text);

/// True iff the token is valid in a TokenSeq (non-empty, no whitespace).
bool is_valid_token(std::string_view token);

}  // namespace tsforge

#endif  // TSFORGE_TOKEN_SEQ_HPP_
