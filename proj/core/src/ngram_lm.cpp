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

#include "tsforge/ngram_lm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "tsforge/errors.hpp"

namespace tsforge {

namespace {

// Internal sentinels; tokens cannot contain whitespace but could in principle
// contain control bytes, so these are documented as reserved.
constexpr char kJoin = '\x1F';
constexpr std::string_view kBos = "\x02";
constexpr std::string_view kUnk = "\x03";
constexpr std::string_view kBosFileToken = "<s>";

std::string join_key(std::span<const std::string_view> parts) {
  std::string key;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) key += kJoin;
    key += parts[i];
  }
  return key;
}

}  // namespace

NgramLM::NgramLM(std::size_t order, double k) : order_(order), k_(k) {
  if (order < 1) throw ConfigError("n-gram order must be >= 1");
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw ConfigError("add-k smoothing constant must be a finite positive number");
  }
}

void NgramLM::add_sentence(const TokenSeq& sentence) {
  const std::size_t ctx_len = order_ - 1;
  std::vector<std::string_view> window(ctx_len, kBos);
  for (const auto& token : sentence) {
    const std::string ctx_key =
        join_key(std::span<const std::string_view>(window.data(), ctx_len));
    window.push_back(token);
    const std::string ngram_key =
        join_key(std::span<const std::string_view>(window.data() + window.size() - order_,
                                                   order_));
    ++ngram_counts_[ngram_key];
    ++context_counts_[ctx_key];
    vocab_.insert(token);
    window.erase(window.begin());
  }
}

void NgramLM::train(std::span<const TokenSeq> corpus) {
  for (const auto& sentence : corpus) add_sentence(sentence);
}

std::string NgramLM::intern(std::string_view token) const {
  if (token == kBos || vocab_.contains(std::string(token))) return std::string(token);
  return std::string(kUnk);
}

double NgramLM::prob(std::span<const std::string> context, std::string_view token) const {
  const std::size_t ctx_len = order_ - 1;
  std::vector<std::string> ctx(ctx_len, std::string(kBos));
  for (std::size_t i = 0; i < std::min(ctx_len, context.size()); ++i) {
    ctx[ctx_len - 1 - i] = intern(context[context.size() - 1 - i]);
  }
  std::vector<std::string_view> parts(ctx.begin(), ctx.end());
  const std::string ctx_key = join_key(parts);
  const std::string event = intern(token);
  parts.emplace_back(event);
  const std::string ngram_key = join_key(parts);

  const auto ng = ngram_counts_.find(ngram_key);
  const double c = ng == ngram_counts_.end() ? 0.0 : static_cast<double>(ng->second);
  const auto cx = context_counts_.find(ctx_key);
  const double total = cx == context_counts_.end() ? 0.0 : static_cast<double>(cx->second);
  const double v = static_cast<double>(vocab_.size()) + 1.0;  // vocab + UNK
  return (c + k_) / (total + k_ * v);
}

double NgramLM::mean_nll(const TokenSeq& sentence) const {
  if (!trained()) throw ConfigError("language model is untrained");
  if (sentence.empty()) throw DataError("cannot score an empty sentence");
  double total = 0.0;
  const auto& tokens = sentence.tokens();
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::span<const std::string> context(tokens.data(), i);
    total += -std::log(prob(context, tokens[i]));
  }
  return total / static_cast<double>(tokens.size());
}

double NgramLM::perplexity(const TokenSeq& sentence) const {
  return std::exp(mean_nll(sentence));
}

void NgramLM::save(std::ostream& out) const {
  out << "tsforge-ngram-lm v1\n";
  out << "order=" << order_ << '\n';
  std::ostringstream kss;
  kss.precision(17);
  kss << k_;
  out << "k=" << kss.str() << '\n';
  out << "vocab=" << vocab_.size() << '\n';
  std::map<std::string, std::uint64_t> sorted;  // deterministic file bytes
  for (const auto& [key, count] : ngram_counts_) {
    std::string file_key;
    std::size_t start = 0;
    while (start <= key.size()) {
      std::size_t sep = key.find(kJoin, start);
      if (sep == std::string::npos) sep = key.size();
      const std::string_view part(key.data() + start, sep - start);
      if (!file_key.empty()) file_key += ' ';
      file_key += (part == kBos) ? kBosFileToken : part;
      start = sep + 1;
      if (sep == key.size()) break;
    }
    sorted.emplace(std::move(file_key), count);
  }
  for (const auto& [key, count] : sorted) out << key << '\t' << count << '\n';
}

void NgramLM::save_file(const std::string& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out.is_open()) throw ConfigError("cannot open LM file for writing: " + path);
  save(out);
}

NgramLM NgramLM::load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "tsforge-ngram-lm v1") {
    throw DataError("bad LM file: missing \"tsforge-ngram-lm v1\" header");
  }
  auto header_value = [&](std::string_view key) {
    if (!std::getline(in, line) || line.rfind(key, 0) != 0 || line.size() <= key.size() ||
        line[key.size()] != '=') {
      throw DataError("bad LM file: expected \"" + std::string(key) + "=\" header line");
    }
    return line.substr(key.size() + 1);
  };
  std::size_t order = 0;
  double k = 0.0;
  std::size_t vocab_expected = 0;
  try {
    order = std::stoull(header_value("order"));
    k = std::stod(header_value("k"));
    vocab_expected = std::stoull(header_value("vocab"));
  } catch (const std::exception&) {
    throw DataError("bad LM file: malformed header value");
  }

  NgramLM lm(order, k);
  std::size_t line_no = 4;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw DataError("bad LM file line " + std::to_string(line_no) + ": missing count column");
    }
    std::uint64_t count = 0;
    try {
      count = std::stoull(line.substr(tab + 1));
    } catch (const std::exception&) {
      throw DataError("bad LM file line " + std::to_string(line_no) + ": malformed count");
    }
    // Re-tokenize the n-gram, mapping the BOS file token back to the sentinel.
    std::vector<std::string> parts;
    std::size_t start = 0;
    const std::string gram = line.substr(0, tab);
    while (start <= gram.size()) {
      std::size_t sep = gram.find(' ', start);
      if (sep == std::string::npos) sep = gram.size();
      std::string part = gram.substr(start, sep - start);
      parts.push_back(part == kBosFileToken ? std::string(kBos) : std::move(part));
      start = sep + 1;
      if (sep == gram.size()) break;
    }
    if (parts.size() != order) {
      throw DataError("bad LM file line " + std::to_string(line_no) + ": n-gram arity " +
                      std::to_string(parts.size()) + " != order " + std::to_string(order));
    }
    std::vector<std::string_view> views(parts.begin(), parts.end());
    const std::string ngram_key = join_key(views);
    const std::string ctx_key =
        join_key(std::span<const std::string_view>(views.data(), order - 1));
    lm.ngram_counts_[ngram_key] += count;
    lm.context_counts_[ctx_key] += count;
    if (parts.back() != kBos) lm.vocab_.insert(parts.back());
  }
  if (lm.vocab_.size() != vocab_expected) {
    throw DataError("bad LM file: header claims vocab=" + std::to_string(vocab_expected) +
                    " but counts imply " + std::to_string(lm.vocab_.size()));
  }
  return lm;
}

NgramLM NgramLM::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.is_open()) throw ConfigError("cannot open LM file: " + path);
  try {
    return load(in);
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

}  // namespace tsforge
