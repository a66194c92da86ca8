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

// JSON views of the library's results, and the writer used for every report:
// keys sorted, floating-point numbers at 17 significant digits, non-finite
// values as null.

#include <string>

#include <nlohmann/json.hpp>

#include "qpair/canonical.hpp"
#include "qpair/classify.hpp"
#include "qpair/degree.hpp"
#include "qpair/invariants.hpp"
#include "qpair/state.hpp"

namespace qpair {

using Json = nlohmann::json;

std::string write_json(const Json& value, bool pretty = false);

Json to_json(const Vec3& v);
Json to_json(const Mat3& m);
Json to_json(const TwoQubitState& state);
Json to_json(const PureStateVector& psi);
Json to_json(const Verdict& verdict);
Json to_json(const LocalInvariants& loc);
Json to_json(const GlobalInvariants& glob);
Json to_json(const SpectrumResult& spectrum);
Json to_json(const CanonicalForm& form);
Json to_json(const Rank2Params& params);
Json to_json(const Rank2Canonical& canon);
Json to_json(const PurityRank& rank);
Json to_json(const FamilyMatch& match);
Json to_json(const LsDecomposition& decomposition);
Json to_json(const DegreeResult& result);
Json to_json(const Table5Report& table);

}  // namespace qpair
