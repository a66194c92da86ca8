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

#include "qpair/degree.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qpair/canonical.hpp"
#include "qpair/classify.hpp"
#include "qpair/errors.hpp"
#include "qpair/invariants.hpp"

namespace qpair {
namespace {

void require_werner_x(double x) {
  if (!(x >= -1.0 / 3.0 && x <= 1.0)) {
    std::ostringstream os;
    os << "x = " << x << " outside [-1/3, 1]";
    throw ArgumentError(os.str());
  }
}

// Geometry of the rank-2 family shared by the closed forms.
struct Rank2Angles {
  double cos2;  // cos 2theta
  double sin2;  // sin 2theta
  double theta;
};

Rank2Angles rank2_angles(double gamma1, double gamma2) {
  const double theta = rank2_theta(gamma1, gamma2);
  return {std::cos(2 * theta), std::sin(2 * theta), theta};
}

bool rank2_degenerate(double gamma1, double gamma2) {
  return !(std::sin(gamma1) * std::cos(gamma2) > 1e-15);
}

}  // namespace

std::string_view to_string(DegreeMethod method) {
  switch (method) {
    case DegreeMethod::kClosedFormWerner:
      return "ClosedFormWerner";
    case DegreeMethod::kClosedFormWernerFirst:
      return "ClosedFormWernerFirst";
    case DegreeMethod::kClosedFormWernerSecond:
      return "ClosedFormWernerSecond";
    case DegreeMethod::kClosedFormRank2:
      return "ClosedFormRank2";
    case DegreeMethod::kSeparableShortcut:
      return "SeparableShortcut";
    case DegreeMethod::kOptimizer:
      return "Optimizer";
  }
  return "unknown";
}

std::string_view to_string(PairKind kind) {
  switch (kind) {
    case PairKind::kA:
      return "a";
    case PairKind::kB:
      return "b";
    case PairKind::kC:
      return "c";
  }
  return "unknown";
}

double degree_werner(double x) {
  require_werner_x(x);
  return x <= 1.0 / 3.0 ? 1.0 : 1.5 * (1.0 - x);
}

double degree_werner_first(const TwoQubitState& state) {
  if (std::max(state.s.cwiseAbs().maxCoeff(), state.t.cwiseAbs().maxCoeff()) > 1e-12) {
    throw PreconditionError("first-kind closed form needs s = t = 0");
  }
  if (!is_state(state).decision) throw PreconditionError("degree_werner_first requires a valid state");
  const LocalInvariants a = local_invariants(state);
  const double spur = trace_modulus(state.c);
  if (a.a3_1 >= 0 || spur <= 1.0) return 1.0;
  return std::clamp(1.5 - 0.5 * spur, 0.0, 1.0);
}

double werner_second_constraint(double x, double p, double q0) {
  const double q = std::sqrt(1.0 - p * p);
  const double p0 = std::sqrt(std::max(0.0, 1.0 - q0 * q0));
  const double u = q * x - 0.5 * (1.0 - x);
  const double lhs = (1.0 + x - 2.0 * x * p * p0) / q0;
  const double rhs = u + (x - x * x * p * p) / u;
  return lhs - rhs;
}

double werner_second_bell_window_end(double p) {
  const double q = std::sqrt(1.0 - p * p);
  return 0.75 / (q - 0.25 + std::sqrt((1.0 - q) * (1.0 + 0.5 * q)));
}

WernerSecondDegree degree_werner_second(double x, double p) {
  require_werner_x(x);
  if (!(p > 0.0 && p < 1.0)) {
    std::ostringstream os;
    os << "p = " << p << " outside (0, 1)";
    throw ArgumentError(os.str());
  }
  const double q = std::sqrt(1.0 - p * p);
  WernerSecondDegree out;
  if (x <= 1.0 / (1.0 + 2.0 * q)) return out;

  double q0 = q;
  if (x < 1.0) {
    // Largest feasible q0: scan from the top, then bisect the boundary cell.
    // q itself is feasible for every x in the window and guards the scan
    // near x = 1, where the feasible set shrinks onto q.
    constexpr int kScan = 1024;
    auto feasible = [&](double v) { return werner_second_constraint(x, p, v) <= 0.0; };
    double lo = -1, hi = -1;
    for (int k = kScan; k >= 1; --k) {
      const double v = static_cast<double>(k) / kScan;
      if (feasible(v)) {
        lo = v;
        hi = k == kScan ? v : static_cast<double>(k + 1) / kScan;
        break;
      }
    }
    if (feasible(q) && (lo < 0 || q > lo)) {
      lo = q;
      hi = std::min(1.0, std::ceil(q * kScan) / kScan);
      if (hi <= lo) hi = std::min(1.0, lo + 1.0 / kScan);
    }
    if (lo < 0) {
      std::ostringstream os;
      os << "no feasible q0 for x = " << x << ", p = " << p;
      throw NumericalError(os.str());
    }
    if (hi > lo && !feasible(hi)) {
      while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        (feasible(mid) ? lo : hi) = mid;
      }
    } else {
      lo = hi;
    }
    q0 = lo;
  }
  out.q0 = q0;
  out.p0 = std::sqrt(std::max(0.0, 1.0 - q0 * q0));
  out.s = std::clamp(1.0 - ((1.0 + 2.0 * q) * x - 1.0) / (2.0 * q0), 0.0, 1.0);
  return out;
}

double rank2_theta(double gamma1, double gamma2) {
  if (rank2_degenerate(gamma1, gamma2)) {
    throw PreconditionError("theta is undefined when sin gamma1 cos gamma2 = 0");
  }
  // tan g2 / tan g1 without dividing by cos g2 = 0 or tan g1 = inf.
  const double ratio =
      (std::sin(gamma2) * std::cos(gamma1)) / (std::cos(gamma2) * std::sin(gamma1));
  return 0.5 * std::acos(std::clamp(ratio, 0.0, 1.0));
}

bool rank2_branch_inequality(const Rank2Params& params) {
  const Rank2Angles g = rank2_angles(params.gamma1, params.gamma2);
  const double st = std::sin(g.theta), ct = std::cos(g.theta);
  const Vec3& x = params.x;
  const double x1 = std::abs(x(0));
  const double lhs = ((1 + x(2)) * st - x1 * ct) * ((1 - x(2)) * ct - x1 * st);
  return lhs <= x(1) * x(1) * st * ct;
}

double rank2_formula_bc(const Rank2Params& params) {
  const Rank2Angles g = rank2_angles(params.gamma1, params.gamma2);
  const Vec3& x = params.x;
  return 0.5 * (1 - x.squaredNorm()) / (1 - x(2) * g.cos2 - std::abs(x(0)) * g.sin2);
}

double rank2_formula_a(const Rank2Params& params) {
  const Rank2Angles g = rank2_angles(params.gamma1, params.gamma2);
  const Vec3& x = params.x;
  const double root = std::hypot(x(2) - g.cos2, x(1) * g.sin2);
  return (1 - x(2) * g.cos2 - root) / (g.sin2 * g.sin2);
}

Rank2Degree degree_rank2(const Rank2Params& params) {
  validate(params);
  Rank2Degree out;
  if (rank2_degenerate(params.gamma1, params.gamma2)) {
    out.all_separable = true;
    out.separable_shortcut = true;
    return out;
  }
  const TwoQubitState state = construct_family(family::RankTwo{params});
  if (is_separable(state).decision) {
    out.separable_shortcut = true;
    return out;
  }
  const bool holds = rank2_branch_inequality(params);
  out.inequality_holds = holds;
  if (holds) {
    out.s = rank2_formula_bc(params);
    out.pair_kind = params.x(0) >= 0 ? PairKind::kB : PairKind::kC;
  } else {
    out.s = rank2_formula_a(params);
    out.pair_kind = PairKind::kA;
  }
  out.s = std::clamp(out.s, 0.0, 1.0);
  return out;
}

Rank2SeparablePures rank2_separable_pures(double gamma1, double gamma2) {
  validate(Rank2Params{gamma1, gamma2, Vec3::Zero()});
  Rank2SeparablePures out;
  if (rank2_degenerate(gamma1, gamma2)) {
    out.everything_separable = true;
    return out;
  }
  const Rank2Angles g = rank2_angles(gamma1, gamma2);
  if (g.sin2 <= 1e-15) {
    out.points.push_back({gamma1, gamma2, Vec3(0, 0, 1)});
  } else {
    out.points.push_back({gamma1, gamma2, Vec3(g.sin2, 0, g.cos2)});
    out.points.push_back({gamma1, gamma2, Vec3(-g.sin2, 0, g.cos2)});
  }
  return out;
}

DegreeResult degree(const TwoQubitState& state, const LsOptions& options) {
  if (!is_state(state).decision) throw PreconditionError("degree requires a valid state");

  DegreeResult out;
  if (is_separable(state).decision) {
    out.method = DegreeMethod::kSeparableShortcut;
    return out;
  }

  // Werner states are the isotropic case of the first kind and go through it.
  if (std::max(state.s.cwiseAbs().maxCoeff(), state.t.cwiseAbs().maxCoeff()) <= 1e-12) {
    out.s = degree_werner_first(state);
    out.method = DegreeMethod::kClosedFormWernerFirst;
    return out;
  }

  if (const auto split = isotropic_split(state)) {
    const TwoQubitState psi = from_density_matrix(split->pure.projector());
    const double p = psi.s.norm();
    const double x = std::min(split->x, 1.0);
    if (split->x <= 1.0 + 1e-9 && p > 0.0 && p < 1.0) {
      const WernerSecondDegree w = degree_werner_second(x, p);
      out.s = w.s;
      out.method = DegreeMethod::kClosedFormWernerSecond;
      FamilyData data;
      data.q0 = w.q0;
      data.p0 = w.p0;
      data.x = x;
      data.p = p;
      out.family_data = data;
      return out;
    }
  }

  const PurityRank pr = purity_rank(state);
  if (pr.rank == 2 && pr.rank2_x_squared) {
    const Rank2Canonical canon = rank2_canonical(state);
    const Rank2Degree r = degree_rank2(canon.params);
    out.s = r.s;
    out.method = DegreeMethod::kClosedFormRank2;
    FamilyData data;
    data.rank2 = canon.params;
    data.pair_kind = r.pair_kind;
    data.inequality_holds = r.inequality_holds;
    out.family_data = data;
    return out;
  }

  LsDecomposition d = ls_optimize(state, options);
  out.s = d.lambda;
  out.method = DegreeMethod::kOptimizer;
  out.lower_bound = true;
  out.decomposition = std::move(d);
  return out;
}

}  // namespace qpair
