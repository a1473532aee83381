// Copyright 2026 The TreeNoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TREENOISE_ERROR_H_
#define TREENOISE_ERROR_H_

#include <stdexcept>
#include <string>

namespace treenoise {

// Broad failure category. The CLI maps each category to its own exit code.
enum class ErrorKind {
  kConfig,    // invalid parameters, schema or command-line input
  kData,      // unreadable or inconsistent dataset contents
  kInternal,  // a self-check failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error ConfigError(const std::string& message) {
  return Error(ErrorKind::kConfig, message);
}

inline Error DataError(const std::string& message) {
  return Error(ErrorKind::kData, message);
}

inline Error InternalError(const std::string& message) {
  return Error(ErrorKind::kInternal, message);
}

}  // namespace treenoise

#endif  // TREENOISE_ERROR_H_
