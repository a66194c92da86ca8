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

#include <map>
#include <string>

#include "qpair/state.hpp"

namespace qpair {

inline constexpr double kDefaultTolerance = 1e-9;

enum class CriterionMethod { kInvariantForm, kMatrixForm, kBoth };

/// Outcome of a positivity-type test. `margins` holds the slack of every
/// inequality evaluated (negative = violated). With kBoth, the invariant
/// inequalities and the eigenvalue test were both run and agree; `boundary`
/// marks states within the consistency band where the two paths are allowed
/// to differ, in which case the matrix path decides.
struct Verdict {
  bool decision = false;
  std::map<std::string, double> margins;
  CriterionMethod method = CriterionMethod::kBoth;
  bool boundary = false;
};

/// Does (s, t, C) describe a positive operator? Margins: "det" = 1 -
/// (A2 - A1 + A0), "e3" = 4 - (2 A2 - A1), "e2" = 6 - A2 and "min_eigenvalue".
Verdict is_state(const TwoQubitState& state, double tol = kDefaultTolerance);

/// E != 0 beyond `tol` (max-abs entry). Requires a valid state.
bool is_entangled(const TwoQubitState& state, double tol = kDefaultTolerance);

/// Positivity of the partial reflection, in invariant form (thresholds
/// shifted by 16 det E and 16 det C) and by explicit eigensolve.
Verdict is_separable(const TwoQubitState& state, double tol = kDefaultTolerance);

struct PurityRank {
  int rank = 0;
  bool pure = false;
  Eigen::Vector4d eigenvalues = Eigen::Vector4d::Zero();  // ascending
  /// Set when the rank-2 conditions hold: x^2 = (A2 - 2)/4.
  std::optional<double> rank2_x_squared;
};

PurityRank purity_rank(const TwoQubitState& state, double tol = kDefaultTolerance);

/// Which named family a state belongs to, as far as local invariants and the
/// spectrum can tell. Names: chaotic, bell, werner, werner_first, pure,
/// werner_second, rank_two, general.
struct FamilyMatch {
  std::string name;
  std::map<std::string, double> parameters;
};

FamilyMatch detect_family(const TwoQubitState& state, double tol = kDefaultTolerance);

/// Rank-1 eigenvector of the largest eigenvalue when the other three are
/// degenerate within `tol`: state = (1 - x)/4 + x |psi><psi| with x > tol.
struct IsotropicSplit {
  double x = 0;
  PureStateVector pure;
};
std::optional<IsotropicSplit> isotropic_split(const TwoQubitState& state,
                                              double tol = kDefaultTolerance);

}  // namespace qpair
