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

#include "qpair/classify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qpair/canonical.hpp"
#include "qpair/errors.hpp"
#include "qpair/invariants.hpp"
#include "qpair/linalg.hpp"

namespace qpair {
namespace {

// Width of the eigenvalue band around zero inside which the invariant and
// matrix paths may legitimately disagree: the invariant slacks are products
// of eigenvalues and scale differently from the smallest eigenvalue itself.
constexpr double kConsistencyBand = 1e-6;

Verdict combine(bool invariant_ok, double min_eig, double tol,
                std::map<std::string, double> margins, const char* what) {
  const bool matrix_ok = min_eig >= -tol;
  Verdict v;
  v.margins = std::move(margins);
  v.margins["min_eigenvalue"] = min_eig;
  v.method = CriterionMethod::kBoth;
  v.decision = matrix_ok;
  if (invariant_ok != matrix_ok) {
    if (std::abs(min_eig) > kConsistencyBand) {
      std::ostringstream os;
      os << what << ": invariant test says " << (invariant_ok ? "yes" : "no")
         << " but the smallest eigenvalue is " << min_eig << " (margins:";
      for (const auto& [k, val] : v.margins) os << ' ' << k << '=' << val;
      os << ')';
      throw NumericalInconsistencyError(os.str());
    }
    v.boundary = true;
  }
  return v;
}

void require_state(const TwoQubitState& state, double tol, const char* op) {
  if (!is_state(state, tol).decision) {
    throw PreconditionError(std::string(op) + " requires a valid state");
  }
}

void require_tolerance(double tol) {
  if (!(tol > 0.0)) throw ArgumentError("tolerance must be positive");
}

}  // namespace

Verdict is_state(const TwoQubitState& state, double tol) {
  require_tolerance(tol);
  if (!state.s.allFinite() || !state.t.allFinite() || !state.c.allFinite()) {
    throw ArgumentError("state parameters must be finite");
  }
  const GlobalInvariants g = global_invariants(local_invariants(state));
  std::map<std::string, double> margins{
      {"det", 1.0 - (g.a2 - g.a1 + g.a0)},
      {"e3", 4.0 - (2 * g.a2 - g.a1)},
      {"e2", 6.0 - g.a2},
  };
  const bool invariant_ok =
      margins["det"] >= -tol && margins["e3"] >= -tol && margins["e2"] >= -tol;
  const double lo = min_eigenvalue(to_density_matrix(state).matrix());
  return combine(invariant_ok, lo, tol, std::move(margins), "positivity");
}

bool is_entangled(const TwoQubitState& state, double tol) {
  require_tolerance(tol);
  require_state(state, tol, "is_entangled");
  return entanglement_dyadic(state).cwiseAbs().maxCoeff() > tol;
}

Verdict is_separable(const TwoQubitState& state, double tol) {
  require_tolerance(tol);
  require_state(state, tol, "is_separable");
  const GlobalInvariants g = global_invariants(local_invariants(state));
  const double det_e = det_entanglement(state);
  const double det_c = state.c.determinant();
  std::map<std::string, double> margins{
      {"sep_det", 1.0 + 16 * det_e - (g.a2 - g.a1 + g.a0)},
      {"sep_e3", 4.0 + 16 * det_c - (2 * g.a2 - g.a1)},
      {"e2", 6.0 - g.a2},
  };
  const bool invariant_ok =
      margins["sep_det"] >= -tol && margins["sep_e3"] >= -tol && margins["e2"] >= -tol;
  const double lo =
      min_eigenvalue(to_density_matrix(reflect(state, ReflectionKind::kPartial)).matrix());
  return combine(invariant_ok, lo, tol, std::move(margins), "separability");
}

PurityRank purity_rank(const TwoQubitState& state, double tol) {
  require_tolerance(tol);
  require_state(state, tol, "purity_rank");
  PurityRank out;
  out.eigenvalues = hermitian_eigenvalues(to_density_matrix(state).matrix());
  out.rank = static_cast<int>((out.eigenvalues.array() > tol).count());
  out.pure = out.rank == 1;
  if (out.rank == 2) {
    const GlobalInvariants g = global_invariants(local_invariants(state));
    // Two vanishing eigenvalues: det P = 0 and e3 = 0.
    const double band = 64 * tol;
    if (std::abs(g.a2 - g.a1 + g.a0 - 1.0) <= band && std::abs(2 * g.a2 - g.a1 - 4.0) <= band) {
      const double x2 = (g.a2 - 2.0) / 4.0;
      if (x2 < 1.0) out.rank2_x_squared = std::max(0.0, x2);
    }
  }
  return out;
}

std::optional<IsotropicSplit> isotropic_split(const TwoQubitState& state, double tol) {
  const HermitianEigen eig = hermitian_eigen(to_density_matrix(state).matrix());
  const auto& v = eig.values;
  if (v(2) - v(0) > tol) return std::nullopt;
  const double x = v(3) - (v(0) + v(1) + v(2)) / 3.0;
  if (!(x > tol)) return std::nullopt;
  return IsotropicSplit{x, PureStateVector::from_amplitudes(eig.vectors.col(3))};
}

FamilyMatch detect_family(const TwoQubitState& state, double tol) {
  require_tolerance(tol);
  require_state(state, tol, "detect_family");
  const double st = std::max(state.s.cwiseAbs().maxCoeff(), state.t.cwiseAbs().maxCoeff());
  if (st <= tol && state.c.cwiseAbs().maxCoeff() <= tol) return {"chaotic", {}};

  if (st <= tol) {
    const CanonicalForm form = diagonalize_cross(state.c);
    const Vec3& c = form.c;
    if (c(0) - c(2) <= tol) {
      const double x = form.sign < 0 ? c(0) : -c(0);
      if (std::abs(x - 1.0) <= tol) return {"bell", {}};
      return {"werner", {{"x", x}}};
    }
    return {"werner_first",
            {{"sign", static_cast<double>(form.sign)}, {"c1", c(0)}, {"c2", c(1)}, {"c3", c(2)}}};
  }

  const PurityRank pr = purity_rank(state, tol);
  if (pr.pure) return {"pure", {{"p", state.s.norm()}}};
  if (const auto split = isotropic_split(state, tol)) {
    const TwoQubitState psi =
        from_density_matrix(split->pure.projector());
    return {"werner_second", {{"x", split->x}, {"p", psi.s.norm()}}};
  }
  if (pr.rank == 2 && pr.rank2_x_squared) {
    return {"rank_two", {{"x_squared", *pr.rank2_x_squared}}};
  }
  return {"general", {{"rank", static_cast<double>(pr.rank)}}};
}

}  // namespace qpair
