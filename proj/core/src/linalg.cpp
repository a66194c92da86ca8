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

#include "qpair/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace qpair {

Eigen::Vector4d hermitian_eigenvalues(const Mat4c& m) {
  Eigen::SelfAdjointEigenSolver<Mat4c> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double min_eigenvalue(const Mat4c& m) { return hermitian_eigenvalues(m)(0); }

HermitianEigen hermitian_eigen(const Mat4c& m) {
  Eigen::SelfAdjointEigenSolver<Mat4c> solver(m);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Mat4c partial_reflect_matrix(const Mat4c& m) {
  // Transpose on the first qubit: swap the 2x2 blocks (i, j) <-> (j, i).
  Mat4c pt;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      pt.block<2, 2>(2 * i, 2 * j) = m.block<2, 2>(2 * j, 2 * i);
    }
  }
  // Conjugate with sigma_y (x) 1; sigma_y = [[0, -i], [i, 0]].
  Mat4c y = Mat4c::Zero();
  const Complex i(0.0, 1.0);
  y.block<2, 2>(0, 2) = -i * Mat2c::Identity();
  y.block<2, 2>(2, 0) = i * Mat2c::Identity();
  return y * pt * y;
}

double rotation_residual(const Mat3& r) {
  const double orth = (r.transpose() * r - Mat3::Identity()).cwiseAbs().maxCoeff();
  return std::max(orth, std::abs(r.determinant() - 1.0));
}

Mat3 rotation_from_vector(const Vec3& omega) {
  const double angle = omega.norm();
  if (angle == 0.0) return Mat3::Identity();
  return Eigen::AngleAxisd(angle, omega / angle).toRotationMatrix();
}

Mat3 cofactor(const Mat3& c) {
  Mat3 out;
  for (int i = 0; i < 3; ++i) {
    const int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
    for (int j = 0; j < 3; ++j) {
      const int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      // Cyclic index choice carries the (-1)^(i+j) sign automatically.
      out(i, j) = c(i1, j1) * c(i2, j2) - c(i1, j2) * c(i2, j1);
    }
  }
  return out;
}

}  // namespace qpair
