// Copyright 2026 The qpair Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace qpair {

enum class ErrorKind {
  kRepresentation,
  kArgument,
  kValidity,
  kPrecondition,
  kNumericalInconsistency,
  kConvergence,
  kNumerical,
  kParse,
};

std::string_view to_string(ErrorKind kind);

/// Base of every exception thrown by the library. `kind()` is what the CLI
/// reports in its machine-readable error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class RepresentationError : public Error {
 public:
  explicit RepresentationError(const std::string& message)
      : Error(ErrorKind::kRepresentation, message) {}
};

class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& message)
      : Error(ErrorKind::kArgument, message) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message)
      : Error(ErrorKind::kPrecondition, message) {}
};

class NumericalInconsistencyError : public Error {
 public:
  explicit NumericalInconsistencyError(const std::string& message)
      : Error(ErrorKind::kNumericalInconsistency, message) {}
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& message)
      : Error(ErrorKind::kNumerical, message) {}
};

/// Raised when a parameter set does not describe a positive operator.
class ValidityError : public Error {
 public:
  ValidityError(const std::string& message, double min_eigenvalue)
      : Error(ErrorKind::kValidity, message), min_eigenvalue_(min_eigenvalue) {}

  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& message, double best_residual)
      : Error(ErrorKind::kConvergence, message), best_residual_(best_residual) {}

  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

/// `location` is a JSON pointer (e.g. "/C/2/1") or "byte N" for syntax errors.
class ParseError : public Error {
 public:
  enum class Reason { kSyntax, kShape, kNonFinite, kUnknownFormat, kPayload };

  ParseError(Reason reason, std::string location, const std::string& message)
      : Error(ErrorKind::kParse, message),
        reason_(reason),
        location_(std::move(location)) {}

  Reason reason() const noexcept { return reason_; }
  const std::string& location() const noexcept { return location_; }

 private:
  Reason reason_;
  std::string location_;
};

std::string_view to_string(ParseError::Reason reason);

}  // namespace qpair
