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

#ifndef TSFORGE_NGRAM_LM_HPP_
#define TSFORGE_NGRAM_LM_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "tsforge/filters.hpp"
#include "tsforge/token_seq.hpp"

namespace tsforge {

/// Count-based n-gram language model with add-k smoothing, the desk-scale
/// stand-in for a neural LM in the candidate filter.
///
/// Semantics:
///   - contexts are the previous order-1 tokens, padded with a
///     begin-of-sentence marker; no end-of-sentence event is modeled
///   - P(w | ctx) = (count(ctx,w) + k) / (count(ctx) + k * (V + 1)), where V
///     is the vocabulary size and the +1 reserves mass for the unknown token
///   - out-of-vocabulary tokens map to the unknown token in both event and
///     context positions
///
/// The sentinel file token "<s>" is reserved for the begin marker in the
/// persisted format. Training is single-threaded; a trained model is
/// immutable in practice and safe to score from many threads.
class NgramLM final : public LanguageModel {
 public:
  /// order >= 1, k > 0; throws ConfigError otherwise.
  NgramLM(std::size_t order, double k);

  void add_sentence(const TokenSeq& sentence);
  void train(std::span<const TokenSeq> corpus);

  std::size_t order() const { return order_; }
  double smoothing_k() const { return k_; }
  std::size_t vocab_size() const { return vocab_.size(); }
  bool trained() const { return !vocab_.empty(); }

  /// P(token | context), where the context is the final order-1 entries of
  /// `context` (shorter contexts are BOS-padded). Exposed for tests.
  double prob(std::span<const std::string> context, std::string_view token) const;

  /// Mean per-token negative log-likelihood in nats. Throws DataError on an
  /// empty sentence or an untrained model.
  double mean_nll(const TokenSeq& sentence) const override;

  double perplexity(const TokenSeq& sentence) const;

  /// Versioned text format: header lines (order, k, vocab size) followed by
  /// lines "<n-gram tokens>\t<count>" in sorted order.
  void save(std::ostream& out) const;
  void save_file(const std::string& path) const;
  static NgramLM load(std::istream& in);
  static NgramLM load_file(const std::string& path);

 private:
  std::string intern(std::string_view token) const;  // OOV -> UNK sentinel

  std::size_t order_;
  double k_;
  std::unordered_map<std::string, std::uint64_t> ngram_counts_;    // ctx + event
  std::unordered_map<std::string, std::uint64_t> context_counts_;  // ctx totals
  std::unordered_set<std::string> vocab_;                          // event tokens
};

}  // namespace tsforge

#endif  // TSFORGE_NGRAM_LM_HPP_
