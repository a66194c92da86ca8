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

// Degree of separability S: the largest weight lambda in a decomposition
// P = lambda P_sep + (1 - lambda) P_pure with P_sep separable and P_pure a
// pure state.

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "qpair/state.hpp"

namespace qpair {

struct LsOptions {
  int restarts = 64;
  /// Bracketing tolerance on lambda.
  double tol = 1e-6;
  std::uint64_t seed = 0;
  /// Eigenvalue slack for positivity/PPT of the separable part.
  double separability_tol = 1e-10;
  int max_evaluations = 4000;  // per local search
  bool record_history = false;
};

struct LsDecomposition {
  double lambda = 0;
  TwoQubitState sep;
  /// Absent when the input is itself separable (lambda = 1).
  std::optional<PureStateVector> pure;
  double sep_positivity_margin = 0;  // min eigenvalue of P_sep
  double sep_ppt_margin = 0;         // min eigenvalue of its partial reflection
  bool separable_input = false;
  int restarts_used = 0;
  std::vector<std::pair<int, double>> history;  // (restart, best lambda so far)
};

enum class DegreeMethod {
  kClosedFormWerner,
  kClosedFormWernerFirst,
  kClosedFormWernerSecond,
  kClosedFormRank2,
  kSeparableShortcut,
  kOptimizer,
};
std::string_view to_string(DegreeMethod method);

/// Pair kinds of optimal rank-2 decompositions: (a) pure part with x1 = 0,
/// (b) x1 >= 0 paired with separable x1 = sin 2theta, (c) the mirror of (b).
enum class PairKind { kA, kB, kC };
std::string_view to_string(PairKind kind);

struct FamilyData {
  std::optional<double> q0;
  std::optional<double> p0;
  std::optional<PairKind> pair_kind;
  std::optional<bool> inequality_holds;  // rank-2 branch predicate
  std::optional<Rank2Params> rank2;
  std::optional<double> x;
  std::optional<double> p;
};

struct DegreeResult {
  double s = 1;
  DegreeMethod method = DegreeMethod::kSeparableShortcut;
  /// True when S comes from the optimizer and is only a certified lower bound.
  bool lower_bound = false;
  std::optional<LsDecomposition> decomposition;
  std::optional<FamilyData> family_data;
};

/// Werner states: 1 for x <= 1/3, else 3(1 - x)/2.
double degree_werner(double x);

/// First-kind states (s = t = 0): 1 if det C >= 0 or Sp|C| <= 1, else
/// 3/2 - Sp|C|/2.
double degree_werner_first(const TwoQubitState& state);

struct WernerSecondDegree {
  double s = 1;
  std::optional<double> q0;  // set when S < 1
  std::optional<double> p0;
};

/// Second-kind states (1 - x)/4 + x P_pure(p). q0 is the largest value in
/// (0, 1] satisfying the pairing inequality, found by a 1024-point scan and
/// bisection to 1e-10.
WernerSecondDegree degree_werner_second(double x, double p);

/// Left side minus right side of the inequality that defines q0; feasible
/// where this is <= 0. Exposed for tests.
double werner_second_constraint(double x, double p, double q0);

/// Upper end of the x-window in which q0 = 1: (3/4)/(q - 1/4 + sqrt((1-q)(1+q/2))).
double werner_second_bell_window_end(double p);

struct Rank2Degree {
  double s = 1;
  std::optional<PairKind> pair_kind;
  std::optional<bool> inequality_holds;
  bool separable_shortcut = false;
  bool all_separable = false;
};

/// cos 2theta = tan gamma2 / tan gamma1, 0 <= theta <= pi/4; requires
/// sin gamma1 cos gamma2 > 0.
double rank2_theta(double gamma1, double gamma2);

Rank2Degree degree_rank2(const Rank2Params& params);

/// The two closed-form candidates, ignoring the branch predicate and the
/// separability shortcut. Exposed for branch-consistency tests.
double rank2_formula_bc(const Rank2Params& params);
double rank2_formula_a(const Rank2Params& params);
bool rank2_branch_inequality(const Rank2Params& params);

struct Rank2SeparablePures {
  bool everything_separable = false;
  std::vector<Rank2Params> points;
};

/// Pure separable points of a rank-2 family: x = (+-sin 2theta, 0, cos 2theta).
Rank2SeparablePures rank2_separable_pures(double gamma1, double gamma2);

/// Largest lambda in [0, 1] such that (state - (1 - lambda)|psi><psi|)/lambda
/// is positive and has a positive partial reflection. 0 if no lambda > 0 works.
double ls_lambda_for_pure(const TwoQubitState& state, const PureStateVector& psi,
                          double tol = 1e-6, double separability_tol = 1e-10);

/// Multistart Nelder-Mead search over pure parts in the range of the state.
/// The result certifies lambda <= S.
LsDecomposition ls_optimize(const TwoQubitState& state, const LsOptions& options = {});

/// Dispatcher: separable shortcut, first-kind closed form (s = t = 0),
/// second-kind closed form, rank-2 closed form, optimizer fallback.
DegreeResult degree(const TwoQubitState& state, const LsOptions& options = {});

}  // namespace qpair
