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

// Quartic roots for the density-matrix spectrum.
//
// Pure states put a triple root at kappa = 1. Coefficients rounded to double
// move such a root by ~(1e-16)^(1/3), so both the coefficients and the
// companion eigensolve run in quad precision and only the final roots are
// rounded to double.

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/float128.hpp>
#include <Eigen/Eigenvalues>

#include "invariants_impl.hpp"
#include "qpair/errors.hpp"
#include "qpair/invariants.hpp"
#include "qpair/linalg.hpp"

namespace qpair {
namespace {

using Quad = boost::multiprecision::float128;
using QuadMatrix = Eigen::Matrix<Quad, 4, 4>;

// Imaginary parts up to this size are rounding noise and are dropped.
constexpr double kRejectImaginary = 1e-6;

}  // namespace

SpectrumResult spectrum(const TwoQubitState& state) {
  const auto inv = detail::evaluate_invariants<Quad>(state);

  // Companion matrix of kappa^4 + 0 kappa^3 - A2 kappa^2 + A1 kappa - A0.
  QuadMatrix companion = QuadMatrix::Zero();
  companion(0, 1) = 1;
  companion(1, 2) = 1;
  companion(2, 3) = 1;
  companion(3, 0) = inv.big_a0;
  companion(3, 1) = -inv.big_a1;
  companion(3, 2) = inv.big_a2;

  Eigen::EigenSolver<QuadMatrix> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("companion eigensolve did not converge");
  }

  SpectrumResult out;
  for (int k = 0; k < 4; ++k) {
    const double re = static_cast<double>(solver.eigenvalues()(k).real());
    const double im = static_cast<double>(solver.eigenvalues()(k).imag());
    out.max_imaginary = std::max(out.max_imaginary, std::abs(im));
    out.kappa[k] = re;
  }
  if (out.max_imaginary > kRejectImaginary) {
    std::ostringstream os;
    os << "quartic has a root with imaginary part " << out.max_imaginary
       << "; the parameters do not describe a Hermitian operator";
    throw NumericalInconsistencyError(os.str());
  }

  std::sort(out.kappa.begin(), out.kappa.end(), std::greater<>());
  for (int k = 0; k < 4; ++k) out.eigenvalues[k] = (1.0 - out.kappa[k]) / 4.0;
  return out;
}

double spectrum_agreement(const TwoQubitState& state) {
  const SpectrumResult quartic = spectrum(state);
  const Eigen::Vector4d direct = hermitian_eigenvalues(to_density_matrix(state).matrix());
  double worst = 0;
  for (int k = 0; k < 4; ++k) {
    worst = std::max(worst, std::abs(quartic.eigenvalues[k] - direct(k)));
  }
  return worst;
}

}  // namespace qpair
