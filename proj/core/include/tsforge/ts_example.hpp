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

#ifndef TSFORGE_TS_EXAMPLE_HPP_
#define TSFORGE_TS_EXAMPLE_HPP_

#include <string>
#include <string_view>

#include "tsforge/token_seq.hpp"

namespace tsforge {

/// Which augmentation route produced an example.
enum class Origin { golden, pseudo, aligned };

std::string_view to_string(Origin origin);
Origin origin_from_string(std::string_view text);

/// One translation-suggestion training example: the source sentence, the
/// target with exactly one span replaced by a mask token, and the suggestion
/// the model should produce for that span.
struct TSExample {
  TokenSeq source;
  TokenSeq masked_target;
  TokenSeq label;
  Origin origin = Origin::golden;

  bool operator==(const TSExample&) const = default;
};

/// Checks the mask invariants: the mask token occurs exactly once in
/// masked_target and never in source or label; label is non-empty unless
/// allow_empty_label. Throws DataError.
void validate_example(const TSExample& example, std::string_view mask_token,
                      bool allow_empty_label = false);

/// source ++ [sep_token] ++ masked_target. Throws DataError if sep_token
/// occurs in either side or masked_target is empty.
TokenSeq render_model_input(const TSExample& example, std::string_view sep_token);

/// Four TAB-separated columns: source, masked_target, label, origin.
std::string serialize_example(const TSExample& example);
TSExample parse_example(std::string_view row, std::size_t line_no = 0);

}  // namespace tsforge

#endif  // TSFORGE_TS_EXAMPLE_HPP_
