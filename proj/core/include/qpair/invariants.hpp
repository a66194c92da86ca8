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

#include <array>

#include "qpair/state.hpp"

namespace qpair {

/// The nine combinations of (s, t, C) unchanged by independent rotations of
/// the two qubits' axis frames. Suffix "n_m" is a^{(n)}_m: degree n in the
/// state parameters, so mixing with the chaotic state at weight x scales
/// a{n}_m by x^n.
struct LocalInvariants {
  double a2_1 = 0;  // Sp(C^T C)
  double a2_2 = 0;  // s.s
  double a2_3 = 0;  // t.t
  double a3_1 = 0;  // det C
  double a3_2 = 0;  // s.C.t
  double a4_1 = 0;  // Sp((C^T C)^2)
  double a4_2 = 0;  // s.sub(C).t
  double a4_3 = 0;  // s.C.C^T.s
  double a4_4 = 0;  // t.C^T.C.t

  std::array<double, 9> as_array() const {
    return {a2_1, a2_2, a2_3, a3_1, a3_2, a4_1, a4_2, a4_3, a4_4};
  }
};

/// Coefficients of kappa^4 - A2 kappa^2 + A1 kappa - A0 = 0, whose roots
/// give the density-matrix eigenvalues (1 - kappa)/4.
struct GlobalInvariants {
  double a2 = 0;
  double a1 = 0;
  double a0 = 0;
};

struct SpectrumResult {
  std::array<double, 4> kappa{};        // descending
  std::array<double, 4> eigenvalues{};  // (1 - kappa)/4, hence ascending
  double max_imaginary = 0;             // largest |Im kappa| before truncation
};

LocalInvariants local_invariants(const TwoQubitState& state);

/// Matrix of signed 2x2 subdeterminants; C * sub(C)^T = det(C) * 1.
Mat3 subdeterminant(const Mat3& c);

/// det E = det C - s.sub(C).t. Throws NumericalInconsistencyError if it
/// disagrees with a direct determinant of C - s t^T by more than 1e-12
/// (relative to the scale of the entries).
double det_entanglement(const TwoQubitState& state);

/// Sp|C| = sum of singular values, from a symmetric eigensolve of C^T C.
/// The eigenvalues are checked against the cubic built from (a2_1, a4_1, a3_1).
double trace_modulus(const Mat3& c);

GlobalInvariants global_invariants(const LocalInvariants& loc);

/// Roots of the quartic via a companion-matrix eigensolve carried out in
/// quad precision, truncated to real parts. The direct 4x4 eigensolve is
/// used as a cross-check; see `spectrum_agreement`.
SpectrumResult spectrum(const TwoQubitState& state);

/// max |quartic eigenvalue - direct eigenvalue|.
double spectrum_agreement(const TwoQubitState& state);

}  // namespace qpair
