// Copyright 2026 The pptm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PPTM_ERRORS_HPP
#define PPTM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pptm {

enum class ErrorKind {
  InvalidInput,
  SingularMatrix,
  PreconditionViolated,
  UnknownCheck,
  SuiteSelfTestFailure,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::UnknownCheck: return "UnknownCheck";
    case ErrorKind::SuiteSelfTestFailure: return "SuiteSelfTestFailure";
  }
  return "Unknown";
}

/// Base of every error raised by the library. `kind()` lets callers branch
/// without a cascade of catch clauses.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what) : Error(ErrorKind::InvalidInput, what) {}
};

class SingularMatrix : public Error {
 public:
  explicit SingularMatrix(const std::string& what) : Error(ErrorKind::SingularMatrix, what) {}
};

class PreconditionViolated : public Error {
 public:
  explicit PreconditionViolated(const std::string& what)
      : Error(ErrorKind::PreconditionViolated, what) {}
};

class UnknownCheck : public Error {
 public:
  explicit UnknownCheck(const std::string& what) : Error(ErrorKind::UnknownCheck, what) {}
};

class SuiteSelfTestFailure : public Error {
 public:
  explicit SuiteSelfTestFailure(const std::string& what)
      : Error(ErrorKind::SuiteSelfTestFailure, what) {}
};

}  // namespace pptm

#endif  // PPTM_ERRORS_HPP
