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

#include "tsforge/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string>

namespace tsforge {

namespace {

LogLevel parse_level() {
  const char* env = std::getenv("TSFORGE_LOG");
  if (env == nullptr) return LogLevel::info;
  const std::string v(env);
  if (v == "quiet" || v == "0") return LogLevel::quiet;
  if (v == "debug" || v == "2") return LogLevel::debug;
  return LogLevel::info;
}

std::mutex& log_mutex() {
  static std::mutex m;
  return m;
}

void emit(std::string_view prefix, std::string_view message) {
  std::lock_guard<std::mutex> lock(log_mutex());
  std::cerr << "tsforge: " << prefix << message << '\n';
}

}  // namespace

LogLevel log_level() {
  static const LogLevel level = parse_level();
  return level;
}

void log_info(std::string_view message) {
  if (log_level() >= LogLevel::info) emit("", message);
}

void log_debug(std::string_view message) {
  if (log_level() >= LogLevel::debug) emit("[debug] ", message);
}

void log_warn(std::string_view message) {
  if (log_level() >= LogLevel::info) emit("[warn] ", message);
}

}  // namespace tsforge
