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

#include "qpair/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "invariants_impl.hpp"
#include "qpair/errors.hpp"
#include "qpair/linalg.hpp"

namespace qpair {

LocalInvariants local_invariants(const TwoQubitState& state) {
  const auto r = detail::evaluate_invariants<double>(state);
  return {r.a2_1, r.a2_2, r.a2_3, r.a3_1, r.a3_2, r.a4_1, r.a4_2, r.a4_3, r.a4_4};
}

Mat3 subdeterminant(const Mat3& c) { return cofactor(c); }

double det_entanglement(const TwoQubitState& state) {
  const double via_invariants =
      state.c.determinant() - state.s.dot(subdeterminant(state.c) * state.t);
  const double direct = entanglement_dyadic(state).determinant();
  const double scale =
      std::max({1.0, state.c.cwiseAbs().maxCoeff(), state.s.norm() * state.t.norm()});
  if (std::abs(via_invariants - direct) > 1e-12 * scale * scale * scale) {
    std::ostringstream os;
    os << "det E mismatch: invariant form " << via_invariants << ", direct " << direct;
    throw NumericalInconsistencyError(os.str());
  }
  return via_invariants;
}

double trace_modulus(const Mat3& c) {
  Eigen::SelfAdjointEigenSolver<Mat3> solver(c.transpose() * c, Eigen::EigenvaluesOnly);
  const Vec3 zeta = solver.eigenvalues().cwiseMax(0.0);

  // zeta are the roots of z^3 - a2_1 z^2 + (a2_1^2 - a4_1)/2 z - a3_1^2.
  TwoQubitState probe;
  probe.c = c;
  const LocalInvariants loc = local_invariants(probe);
  const double e1 = zeta.sum();
  const double e2 = zeta(0) * zeta(1) + zeta(1) * zeta(2) + zeta(2) * zeta(0);
  const double e3 = zeta.prod();
  const double scale = std::max(1.0, loc.a2_1);
  const double mismatch =
      std::max({std::abs(e1 - loc.a2_1), std::abs(e2 - 0.5 * (loc.a2_1 * loc.a2_1 - loc.a4_1)),
                std::abs(e3 - loc.a3_1 * loc.a3_1)});
  if (mismatch > 1e-10 * scale * scale * scale) {
    std::ostringstream os;
    os << "singular values of C inconsistent with the invariant cubic (mismatch " << mismatch
       << ")";
    throw NumericalInconsistencyError(os.str());
  }
  return zeta.cwiseSqrt().sum();
}

GlobalInvariants global_invariants(const LocalInvariants& loc) {
  GlobalInvariants g;
  g.a2 = 2 * (loc.a2_1 + loc.a2_2 + loc.a2_3);
  g.a1 = 8 * (loc.a3_2 - loc.a3_1);
  const double diff = loc.a2_2 - loc.a2_3;
  g.a0 = loc.a2_1 * loc.a2_1 - 2 * loc.a2_1 * (loc.a2_2 + loc.a2_3) - diff * diff -
         2 * loc.a4_1 - 8 * loc.a4_2 + 4 * loc.a4_3 + 4 * loc.a4_4;
  return g;
}

}  // namespace qpair
