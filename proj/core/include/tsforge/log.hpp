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

#ifndef TSFORGE_LOG_HPP_
#define TSFORGE_LOG_HPP_

#include <string_view>

namespace tsforge {

/// Verbosity comes from the TSFORGE_LOG environment variable:
/// "quiet"/"0", "info"/"1" (default), "debug"/"2".
enum class LogLevel { quiet = 0, info = 1, debug = 2 };

LogLevel log_level();

// All log output goes to stderr; stdout is reserved for data.
void log_info(std::string_view message);
void log_debug(std::string_view message);
void log_warn(std::string_view message);  // printed unless quiet

}  // namespace tsforge

#endif  // TSFORGE_LOG_HPP_
