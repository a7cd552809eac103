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

#include "tsforge/ts_example.hpp"

#include <algorithm>
#include <vector>

#include "tsforge/corpus_io.hpp"
#include "tsforge/errors.hpp"

namespace tsforge {

std::string_view to_string(Origin origin) {
  switch (origin) {
    case Origin::golden: return "golden";
    case Origin::pseudo: return "pseudo";
    case Origin::aligned: return "aligned";
  }
  return "golden";
}

Origin origin_from_string(std::string_view text) {
  if (text == "golden") return Origin::golden;
  if (text == "pseudo") return Origin::pseudo;
  if (text == "aligned") return Origin::aligned;
  throw DataError("unknown origin tag \"" + std::string(text) + "\"");
}

void validate_example(const TSExample& example, std::string_view mask_token,
                      bool allow_empty_label) {
  const auto& masked = example.masked_target.tokens();
  const auto occurrences = std::count(masked.begin(), masked.end(), mask_token);
  if (occurrences != 1) {
    throw DataError("masked target must contain the mask token exactly once, found " +
                    std::to_string(occurrences));
  }
  if (example.source.contains(mask_token)) {
    throw DataError("mask token occurs in the source sentence");
  }
  if (example.label.contains(mask_token)) {
    throw DataError("mask token occurs in the label");
  }
  if (example.label.empty() && !allow_empty_label) {
    throw DataError("empty suggestion label (insertion examples are disabled)");
  }
}

TokenSeq render_model_input(const TSExample& example, std::string_view sep_token) {
  if (example.masked_target.empty()) {
    throw DataError("masked target is empty; cannot render model input");
  }
  if (example.source.contains(sep_token) || example.masked_target.contains(sep_token)) {
    throw DataError("separator token \"" + std::string(sep_token) +
                    "\" collides with a sentence token");
  }
  std::vector<std::string> tokens;
  tokens.reserve(example.source.size() + 1 + example.masked_target.size());
  tokens.insert(tokens.end(), example.source.begin(), example.source.end());
  tokens.emplace_back(sep_token);
  tokens.insert(tokens.end(), example.masked_target.begin(), example.masked_target.end());
  return TokenSeq(std::move(tokens));
}

std::string serialize_example(const TSExample& example) {
  std::string out = example.source.joined();
  out += '\t';
  out += example.masked_target.joined();
  out += '\t';
  out += example.label.joined();
  out += '\t';
  out += to_string(example.origin);
  return out;
}

TSExample parse_example(std::string_view row, std::size_t line_no) {
  const auto cols = split_columns(row, 4, line_no, "TS example");
  TSExample example;
  example.source = tokenize(cols[0]);
  example.masked_target = tokenize(cols[1]);
  example.label = tokenize(cols[2]);
  try {
    example.origin = origin_from_string(cols[3]);
  } catch (const DataError& e) {
    throw DataError("line " + std::to_string(line_no) + ": " + e.what());
  }
  if (example.source.empty() || example.masked_target.empty()) {
    throw DataError("line " + std::to_string(line_no) +
                    ": TS example needs non-empty source and masked target");
  }
  return example;
}

}  // namespace tsforge
