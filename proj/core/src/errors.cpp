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

#include "qpair/errors.hpp"

namespace qpair {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kRepresentation: return "representation";
    case ErrorKind::kArgument: return "argument";
    case ErrorKind::kValidity: return "validity";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kNumericalInconsistency: return "numerical_inconsistency";
    case ErrorKind::kConvergence: return "convergence";
    case ErrorKind::kNumerical: return "numerical";
    case ErrorKind::kParse: return "parse";
  }
  return "unknown";
}

std::string_view to_string(ParseError::Reason reason) {
  switch (reason) {
    case ParseError::Reason::kSyntax: return "syntax";
    case ParseError::Reason::kShape: return "shape";
    case ParseError::Reason::kNonFinite: return "non_finite";
    case ParseError::Reason::kUnknownFormat: return "unknown_format";
    case ParseError::Reason::kPayload: return "payload";
  }
  return "unknown";
}

}  // namespace qpair
