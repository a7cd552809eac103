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

#ifndef TSFORGE_DUAL_CE_HPP_
#define TSFORGE_DUAL_CE_HPP_

#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>

#include "tsforge/filters.hpp"
#include "tsforge/token_seq.hpp"

namespace tsforge {

/// Word translation probabilities P(out | cond). Per conditioning token the
/// listed probabilities must sum to at most 1; the remainder is the mass of
/// producing an unlisted token. File format: "<cond>\t<out>\t<prob>" lines.
class LexicalTable {
 public:
  LexicalTable() = default;

  /// prob must be in (0, 1]; duplicate (cond, out) entries are rejected.
  void add(std::string cond, std::string out, double prob);

  /// P(out | cond): the table entry if present, otherwise the leftover
  /// unknown mass for cond (floored at 1e-6 so log stays finite). Unlisted
  /// conditioning tokens carry no evidence and return the floor.
  double prob(std::string_view cond, std::string_view out) const;

  std::size_t size() const { return entries_; }
  bool empty() const { return entries_ == 0; }

  void save(std::ostream& out) const;
  static LexicalTable load(std::istream& in);
  static LexicalTable load_file(const std::string& path);

  static constexpr double kProbFloor = 1e-6;

 private:
  struct Row {
    std::unordered_map<std::string, double> out_probs;
    double mass = 0.0;
  };
  std::unordered_map<std::string, Row> rows_;
  std::size_t entries_ = 0;
};

/// Per-token cross-entropy of producing `out` conditioned on `cond`; nats.
class ConditionalCrossEntropy {
 public:
  virtual ~ConditionalCrossEntropy() = default;
  virtual double cross_entropy(const TokenSeq& cond, const TokenSeq& out) const = 0;
};

/// IBM-1 style reference model: each output token is generated from the
/// uniform mixture over conditioning tokens, P(t | cond) =
/// mean_s table.prob(s, t), and the cross-entropy is the mean -log of that.
class LexicalCrossEntropy final : public ConditionalCrossEntropy {
 public:
  explicit LexicalCrossEntropy(LexicalTable table) : table_(std::move(table)) {}

  double cross_entropy(const TokenSeq& cond, const TokenSeq& out) const override;

 private:
  LexicalTable table_;
};

/// Combines forward H(target|source) and backward H(source|target) per-token
/// cross-entropies into a single quality score; lower is better. Symmetric
/// pairs score their shared cross-entropy, disagreement is penalized.
class DualCEScorer final : public QualityScorer {
 public:
  DualCEScorer(std::shared_ptr<const ConditionalCrossEntropy> forward,
               std::shared_ptr<const ConditionalCrossEntropy> backward);

  /// (h_f + h_b) / 2 + |h_f - h_b|
  static double combine(double h_forward, double h_backward);

  double score(const TokenSeq& source, const TokenSeq& target) const override;

 private:
  std::shared_ptr<const ConditionalCrossEntropy> forward_;
  std::shared_ptr<const ConditionalCrossEntropy> backward_;
};

}  // namespace tsforge

#endif  // TSFORGE_DUAL_CE_HPP_
