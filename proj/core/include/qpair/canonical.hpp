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

#include <cstdint>

#include "qpair/state.hpp"

namespace qpair {

/// C = sign * O_ee * diag(c) * O_nn with O_ee, O_nn proper rotations and
/// c1 >= c2 >= c3 >= 0 (the characteristic values).
struct CanonicalForm {
  Mat3 o_ee = Mat3::Identity();
  Mat3 o_nn = Mat3::Identity();
  Vec3 c = Vec3::Zero();
  int sign = 1;

  /// O_en = O_ee * O_nn, so that C = sign * O_en * |C|.
  Mat3 o_en() const { return o_ee * o_nn; }
};

/// Local transformation: s -> O_ee s, t -> O_nn^T t, C -> O_ee C O_nn.
/// Throws ArgumentError unless both matrices are proper rotations (1e-10).
TwoQubitState apply_local(const TwoQubitState& state, const Mat3& o_ee, const Mat3& o_nn);

/// Signed SVD of the cross dyadic.
CanonicalForm diagonalize_cross(const Mat3& c);
inline CanonicalForm diagonalize_cross(const TwoQubitState& state) {
  return diagonalize_cross(state.c);
}

/// The single local-orbit label of a pure state: p = |s| = |t|, with
/// characteristic values (1, q, q), q = sqrt(1 - p^2).
double pure_canonical(const TwoQubitState& state, double tol = 1e-9);

struct Rank2Options {
  int restarts = 32;
  std::uint64_t seed = 0;
  double target_residual = 1e-7;
  double max_residual = 1e-6;
};

struct Rank2Canonical {
  Rank2Params params;
  /// apply_local(state, o_ee, o_nn) equals construct_family(RankTwo(params)).
  Mat3 o_ee = Mat3::Identity();
  Mat3 o_nn = Mat3::Identity();
  double residual = 0;  // max-abs mismatch over the 15 parameters
  int restarts_used = 0;
};

/// Reduces a rank-2 state to the generic form (Sigma_0 + x . Sigma)/2.
/// gamma1, gamma2 follow from the local invariants of the support
/// projector; the rotation pair comes from multistart Levenberg-Marquardt
/// over six rotation parameters, seeded with the signed SVD of the
/// projector's cross dyadic.
Rank2Canonical rank2_canonical(const TwoQubitState& state, const Rank2Options& options = {});

}  // namespace qpair
