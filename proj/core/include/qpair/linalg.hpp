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

// Small fixed-size helpers shared by the modules.

#include <Eigen/Dense>

#include "qpair/state.hpp"

namespace qpair {

/// Eigenvalues of a Hermitian 4x4 matrix, ascending.
Eigen::Vector4d hermitian_eigenvalues(const Mat4c& m);

double min_eigenvalue(const Mat4c& m);

struct HermitianEigen {
  Eigen::Vector4d values;  // ascending
  Mat4c vectors;           // columns, matching `values`
};
HermitianEigen hermitian_eigen(const Mat4c& m);

/// Matrix form of the partial reflection (s, t, C) -> (-s, t, -C):
/// (sigma_y (x) 1) M^{T_1} (sigma_y (x) 1). Linear, so it also applies to
/// unnormalized operators.
Mat4c partial_reflect_matrix(const Mat4c& m);

/// max(|R^T R - 1|_max, |det R - 1|); zero for a proper rotation.
double rotation_residual(const Mat3& r);

/// Rotation matrix from a rotation vector (axis * angle).
Mat3 rotation_from_vector(const Vec3& omega);

/// Signed cofactor matrix: C * cofactor(C)^T = det(C) * 1.
Mat3 cofactor(const Mat3& c);

}  // namespace qpair
