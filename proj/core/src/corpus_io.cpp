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

#include "tsforge/corpus_io.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include "tsforge/errors.hpp"
#include "tsforge/ts_example.hpp"

namespace tsforge {

std::vector<std::string_view> split_columns(std::string_view row, std::size_t expected,
                                            std::size_t line_no, std::string_view what) {
  std::vector<std::string_view> cols;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = row.find('\t', start);
    if (tab == std::string_view::npos) {
      cols.push_back(row.substr(start));
      break;
    }
    cols.push_back(row.substr(start, tab - start));
    start = tab + 1;
  }
  if (cols.size() != expected) {
    throw DataError("line " + std::to_string(line_no) + ": " + std::string(what) +
                    " row has " + std::to_string(cols.size()) + " columns, expected " +
                    std::to_string(expected));
  }
  return cols;
}

ParallelPair parse_parallel_row(std::string_view row, std::size_t line_no) {
  const auto cols = split_columns(row, 2, line_no, "parallel corpus");
  ParallelPair pair{tokenize(cols[0]), tokenize(cols[1])};
  if (pair.source.empty() || pair.reference.empty()) {
    throw DataError("line " + std::to_string(line_no) + ": parallel pair has an empty side");
  }
  return pair;
}

Triplet parse_triplet_row(std::string_view row, std::size_t line_no) {
  const auto cols = split_columns(row, 3, line_no, "triplet");
  Triplet t{tokenize(cols[0]), tokenize(cols[1]), tokenize(cols[2])};
  if (t.source.empty() || t.mt.empty() || t.reference.empty()) {
    throw DataError("line " + std::to_string(line_no) + ": triplet has an empty side");
  }
  return t;
}

std::string serialize_parallel_row(const ParallelPair& pair) {
  return pair.source.joined() + '\t' + pair.reference.joined();
}

std::string serialize_triplet_row(const Triplet& triplet) {
  return triplet.source.joined() + '\t' + triplet.mt.joined() + '\t' +
         triplet.reference.joined();
}

LineReader::LineReader(const std::string& path) : path_(path) {
  if (path == "-") {
    in_ = &std::cin;
    return;
  }
  auto file = std::make_unique<std::ifstream>(path);
  if (!file->is_open()) {
    throw ConfigError("cannot open input file: " + path);
  }
  owned_ = std::move(file);
  in_ = owned_.get();
}

LineReader::~LineReader() = default;

bool LineReader::next(std::string& line) {
  if (!std::getline(*in_, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  ++line_no_;
  return true;
}

LineWriter::LineWriter(const std::string& path, bool force) : path_(path) {
  if (path == "-") {
    out_ = &std::cout;
    return;
  }
  if (!force && std::filesystem::exists(path)) {
    throw ConfigError("output file exists, pass --force to overwrite: " + path);
  }
  auto file = std::make_unique<std::ofstream>(path, std::ios::trunc);
  if (!file->is_open()) {
    throw ConfigError("cannot open output file: " + path);
  }
  owned_ = std::move(file);
  out_ = owned_.get();
}

LineWriter::~LineWriter() { flush(); }

void LineWriter::write_line(std::string_view line) {
  out_->write(line.data(), static_cast<std::streamsize>(line.size()));
  out_->put('\n');
}

void LineWriter::flush() { out_->flush(); }

namespace {

template <typename Row, typename ParseFn>
std::vector<Row> read_rows(const std::string& path, ParseFn parse) {
  LineReader reader(path);
  std::vector<Row> rows;
  std::string line;
  while (reader.next(line)) {
    try {
      rows.push_back(parse(line, reader.line_no()));
    } catch (const DataError& e) {
      throw DataError(path + ": " + e.what());
    }
  }
  return rows;
}

}  // namespace

std::vector<ParallelPair> read_parallel_file(const std::string& path) {
  return read_rows<ParallelPair>(path, [](std::string_view row, std::size_t n) {
    return parse_parallel_row(row, n);
  });
}

std::vector<Triplet> read_triplet_file(const std::string& path) {
  return read_rows<Triplet>(path, [](std::string_view row, std::size_t n) {
    return parse_triplet_row(row, n);
  });
}

std::vector<TSExample> read_example_file(const std::string& path) {
  return read_rows<TSExample>(path, [](std::string_view row, std::size_t n) {
    return parse_example(row, n);
  });
}

void write_example_file(const std::string& path, const std::vector<TSExample>& examples,
                        bool force) {
  LineWriter writer(path, force);
  for (const auto& e : examples) writer.write_line(serialize_example(e));
}

}  // namespace tsforge
