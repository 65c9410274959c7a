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
//
// Copyright 2026 The syntex authors.

#ifndef SYNTEX_ERROR_HPP
#define SYNTEX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace syntex {

// Broad failure classes. The numeric values double as CLI exit codes and
// C API status codes (0 is reserved for success).
enum class ErrClass : int {
  validation = 2,  // bad arguments, bad config, missing paths
  data = 3,        // malformed or inconsistent data
  backend = 4,     // remote generation backend unavailable
  io = 5,          // filesystem read/write failure
  internal = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrClass cls, std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message),
        cls_(cls),
        kind_(std::move(kind)) {}

  ErrClass err_class() const { return cls_; }
  // Stable machine-readable name, e.g. "MissingDisclaimer".
  const std::string& kind() const { return kind_; }

  static Error validation(const std::string& kind, const std::string& msg) {
    return Error(ErrClass::validation, kind, msg);
  }
  static Error data(const std::string& kind, const std::string& msg) {
    return Error(ErrClass::data, kind, msg);
  }
  static Error backend(const std::string& kind, const std::string& msg) {
    return Error(ErrClass::backend, kind, msg);
  }
  static Error io(const std::string& kind, const std::string& msg) {
    return Error(ErrClass::io, kind, msg);
  }

 private:
  ErrClass cls_;
  std::string kind_;
};

}  // namespace syntex

#endif  // SYNTEX_ERROR_HPP
