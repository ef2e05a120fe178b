// chanfm - channel foundation model toolkit
// Copyright (C) 2026 chanfm contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef CHANFM_ERRORS_HPP
#define CHANFM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chanfm {

/// Invalid configuration or argument values. Maps to CLI exit code 2.
class ValidationError : public std::invalid_argument {
  public:
    explicit ValidationError(const std::string &msg) : std::invalid_argument(msg) {}
};

/// Held-out data reached a training or pre-trained evaluation path. Exit code 3.
class LeakageError : public std::runtime_error {
  public:
    explicit LeakageError(const std::string &msg) : std::runtime_error(msg) {}
};

/// File read/write failure. Exit code 1.
class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Stored bytes disagree with their recorded digest or header.
class CorruptionError : public IoError {
  public:
    explicit CorruptionError(const std::string &msg) : IoError(msg) {}
};

} // namespace chanfm

#endif // CHANFM_ERRORS_HPP
