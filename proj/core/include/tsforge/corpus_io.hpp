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

#ifndef TSFORGE_CORPUS_IO_HPP_
#define TSFORGE_CORPUS_IO_HPP_

#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tsforge/token_seq.hpp"

namespace tsforge {

struct TSExample;

/// A (source, reference) sentence pair. Both sides non-empty.
struct ParallelPair {
  TokenSeq source;
  TokenSeq reference;

  bool operator==(const ParallelPair&) const = default;
};

/// A (source, machine translation, reference) triplet. All sides non-empty.
struct Triplet {
  TokenSeq source;
  TokenSeq mt;
  TokenSeq reference;

  bool operator==(const Triplet&) const = default;
};

/// Splits a TSV row into exactly `expected` columns; throws DataError naming
/// the line and dataset kind otherwise.
std::vector<std::string_view> split_columns(std::string_view row, std::size_t expected,
                                            std::size_t line_no, std::string_view what);

ParallelPair parse_parallel_row(std::string_view row, std::size_t line_no = 0);
Triplet parse_triplet_row(std::string_view row, std::size_t line_no = 0);
std::string serialize_parallel_row(const ParallelPair& pair);
std::string serialize_triplet_row(const Triplet& triplet);

/// Streaming line reader. Path "-" reads standard input. Strips one trailing
/// '\r' so CRLF corpora parse cleanly.
class LineReader {
 public:
  explicit LineReader(const std::string& path);
  ~LineReader();

  LineReader(const LineReader&) = delete;
  LineReader& operator=(const LineReader&) = delete;

  /// False at end of input. line_no() counts the lines returned so far (1-based).
  bool next(std::string& line);

  std::size_t line_no() const { return line_no_; }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::unique_ptr<std::istream> owned_;
  std::istream* in_;
  std::size_t line_no_ = 0;
};

/// Output writer honoring the never-overwrite rule. Path "-" writes stdout.
class LineWriter {
 public:
  /// Throws ConfigError if the path exists and force is false.
  LineWriter(const std::string& path, bool force);
  ~LineWriter();

  LineWriter(const LineWriter&) = delete;
  LineWriter& operator=(const LineWriter&) = delete;

  void write_line(std::string_view line);
  void flush();

 private:
  std::string path_;
  std::unique_ptr<std::ostream> owned_;
  std::ostream* out_;
};

// Whole-file helpers for small corpora and tests. Each validates rows and
// reports errors as "<path>:<line>: ...".
std::vector<ParallelPair> read_parallel_file(const std::string& path);
std::vector<Triplet> read_triplet_file(const std::string& path);
std::vector<TSExample> read_example_file(const std::string& path);
void write_example_file(const std::string& path, const std::vector<TSExample>& examples,
                        bool force = false);

}  // namespace tsforge

#endif  // TSFORGE_CORPUS_IO_HPP_
