// Copyright 2026 The pathspec Authors
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

#ifndef PATHSPEC_ERROR_HPP
#define PATHSPEC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pathspec {

enum class ErrorKind {
  InvalidArgument,
  DegreeZero,
  PrecisionExhausted,
  DegenerateGeometry,
  NonIntegral,
};

// Every failure raised by the core carries one of the kinds above so the C
// layer can map it onto a status code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DegreeZero: return "DegreeZero";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::DegenerateGeometry: return "DegenerateGeometry";
    case ErrorKind::NonIntegral: return "NonIntegral";
  }
  return "Unknown";
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool condition, const std::string& what) {
  if (!condition) fail(ErrorKind::InvalidArgument, what);
}

}  // namespace pathspec

#endif  // PATHSPEC_ERROR_HPP
