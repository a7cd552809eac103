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

#ifndef TSFORGE_ERRORS_HPP_
#define TSFORGE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace tsforge {

/// Base class for all tsforge errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad usage, bad configuration, missing input files. CLI exit code 1.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed data encountered while processing. CLI exit code 2.
/// Messages carry the offending path/line where available.
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace tsforge

#endif  // TSFORGE_ERRORS_HPP_
