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

// State files: JSON with a format tag and either the (s, t, C) parameters or
// a density matrix in the basis documented in state.hpp.
//
//   {"format": "qpair-state/1", "s": [..], "t": [..], "C": [[..], [..], [..]]}
//   {"format": "qpair-state/1", "rho": {"re": [[4 x 4]], "im": [[4 x 4]]}}
//
// An optional "metadata" object maps names to strings.

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "qpair/state.hpp"

namespace qpair {

inline constexpr std::string_view kStateFormat = "qpair-state/1";

enum class PayloadKind { kParameters, kDensityMatrix };

struct StateFile {
  TwoQubitState state;
  std::map<std::string, std::string> metadata;
  PayloadKind payload = PayloadKind::kParameters;
};

/// Throws ParseError (syntax, shape, non-finite number, unknown format tag,
/// payload mix-up) with a location, or RepresentationError for a rho payload
/// that is not Hermitian with unit trace.
StateFile parse_state_file(std::string_view text);
inline TwoQubitState parse_state(std::string_view text) { return parse_state_file(text).state; }

StateFile read_state_file(const std::filesystem::path& path);

/// Parameter payload with every number at 17 significant digits, so that
/// parse_state(serialize_state(x)) == x exactly.
std::string serialize_state(const StateFile& file, bool pretty = false);
std::string serialize_state(const TwoQubitState& state, bool pretty = false);

}  // namespace qpair
