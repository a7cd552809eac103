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

#include "tsforge/dual_ce.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "tsforge/errors.hpp"

namespace tsforge {

void LexicalTable::add(std::string cond, std::string out, double prob) {
  if (!(prob > 0.0) || prob > 1.0 || !std::isfinite(prob)) {
    throw DataError("lexical probability must be in (0, 1], got " + std::to_string(prob));
  }
  Row& row = rows_[std::move(cond)];
  if (row.out_probs.contains(out)) {
    throw DataError("duplicate lexical entry for output token \"" + out + "\"");
  }
  const double new_mass = row.mass + prob;
  if (new_mass > 1.0 + 1e-9) {
    throw DataError("lexical probabilities for a conditioning token sum to " +
                    std::to_string(new_mass) + " > 1");
  }
  row.mass = new_mass;
  row.out_probs.emplace(std::move(out), prob);
  ++entries_;
}

double LexicalTable::prob(std::string_view cond, std::string_view out) const {
  const auto row = rows_.find(std::string(cond));
  if (row == rows_.end()) return kProbFloor;
  const auto entry = row->second.out_probs.find(std::string(out));
  if (entry != row->second.out_probs.end()) return entry->second;
  return std::max(1.0 - row->second.mass, kProbFloor);
}

void LexicalTable::save(std::ostream& out) const {
  std::map<std::string, std::map<std::string, double>> sorted;
  for (const auto& [cond, row] : rows_) {
    for (const auto& [tgt, p] : row.out_probs) sorted[cond][tgt] = p;
  }
  out.precision(17);
  for (const auto& [cond, row] : sorted) {
    for (const auto& [tgt, p] : row) out << cond << '\t' << tgt << '\t' << p << '\n';
  }
}

LexicalTable LexicalTable::load(std::istream& in) {
  LexicalTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t t1 = line.find('\t');
    const std::size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) {
      throw DataError("line " + std::to_string(line_no) +
                      ": lexical table rows need 3 TAB-separated columns");
    }
    double p = 0.0;
    try {
      p = std::stod(line.substr(t2 + 1));
    } catch (const std::exception&) {
      throw DataError("line " + std::to_string(line_no) + ": malformed probability");
    }
    try {
      table.add(line.substr(0, t1), line.substr(t1 + 1, t2 - t1 - 1), p);
    } catch (const DataError& e) {
      throw DataError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return table;
}

LexicalTable LexicalTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.is_open()) throw ConfigError("cannot open lexical table: " + path);
  try {
    return load(in);
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

double LexicalCrossEntropy::cross_entropy(const TokenSeq& cond, const TokenSeq& out) const {
  if (cond.empty() || out.empty()) {
    throw DataError("cross-entropy needs non-empty sentences on both sides");
  }
  double total = 0.0;
  for (const auto& out_token : out) {
    double mix = 0.0;
    for (const auto& cond_token : cond) {
      mix += table_.prob(cond_token, out_token);
    }
    mix /= static_cast<double>(cond.size());
    total += -std::log(mix);
  }
  return total / static_cast<double>(out.size());
}

DualCEScorer::DualCEScorer(std::shared_ptr<const ConditionalCrossEntropy> forward,
                           std::shared_ptr<const ConditionalCrossEntropy> backward)
    : forward_(std::move(forward)), backward_(std::move(backward)) {
  if (!forward_ || !backward_) throw ConfigError("DualCEScorer needs both directions");
}

double DualCEScorer::combine(double h_forward, double h_backward) {
  return (h_forward + h_backward) / 2.0 + std::abs(h_forward - h_backward);
}

double DualCEScorer::score(const TokenSeq& source, const TokenSeq& target) const {
  const double h_f = forward_->cross_entropy(source, target);
  const double h_b = backward_->cross_entropy(target, source);
  return combine(h_f, h_b);
}

}  // namespace tsforge
