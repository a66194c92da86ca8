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

#include "qpair/canonical.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/SVD>

#include "qpair/classify.hpp"
#include "qpair/errors.hpp"
#include "qpair/linalg.hpp"

namespace qpair {
namespace {

TwoQubitState rotate(const TwoQubitState& state, const Mat3& o_ee, const Mat3& o_nn) {
  return {o_ee * state.s, o_nn.transpose() * state.t, o_ee * state.c * o_nn};
}

using Residual = Eigen::Matrix<double, 15, 1>;
using Params6 = Eigen::Matrix<double, 6, 1>;

// Fits apply_local(state, R_e, R_n) to the rank-2 generic form at fixed
// (gamma1, gamma2); x follows by projection on Sigma_1..3.
class Rank2Fit {
 public:
  Rank2Fit(const TwoQubitState& state, double gamma1, double gamma2)
      : state_(state), sigma_(sigma_basis_expansions(gamma1, gamma2)) {}

  Vec3 project(const TwoQubitState& rotated) const {
    Vec3 x;
    for (int k = 0; k < 3; ++k) {
      const PauliExpansion& e = sigma_[k + 1];
      x(k) = e.id + e.s.dot(rotated.s) + e.t.dot(rotated.t) + (e.c.array() * rotated.c.array()).sum();
    }
    return x;
  }

  TwoQubitState model(const Vec3& x) const {
    PauliExpansion m = sigma_[0];
    for (int k = 0; k < 3; ++k) {
      m.s += x(k) * sigma_[k + 1].s;
      m.t += x(k) * sigma_[k + 1].t;
      m.c += x(k) * sigma_[k + 1].c;
    }
    return {2 * m.s, 2 * m.t, 2 * m.c};
  }

  Residual residual(const Mat3& r_e, const Mat3& r_n) const {
    const TwoQubitState rotated = rotate(state_, r_e, r_n);
    const TwoQubitState fit = model(project(rotated));
    Residual out;
    out.segment<3>(0) = rotated.s - fit.s;
    out.segment<3>(3) = rotated.t - fit.t;
    const Mat3 dc = rotated.c - fit.c;
    out.segment<9>(6) = Eigen::Map<const Eigen::Matrix<double, 9, 1>>(dc.data());
    return out;
  }

 private:
  TwoQubitState state_;
  std::array<PauliExpansion, 4> sigma_;
};

struct LmResult {
  Mat3 r_e;
  Mat3 r_n;
  double residual;  // max-abs
};

// Levenberg-Marquardt on the rotation pair, re-basing the rotations after
// every accepted step so the Jacobian is always taken at omega = 0.
LmResult levenberg_marquardt(const Rank2Fit& fit, Mat3 r_e, Mat3 r_n, double target) {
  auto apply = [](const Mat3& r_e0, const Mat3& r_n0, const Params6& w) {
    return std::pair<Mat3, Mat3>{r_e0 * rotation_from_vector(w.head<3>()),
                                 r_n0 * rotation_from_vector(w.tail<3>())};
  };
  Residual f = fit.residual(r_e, r_n);
  double cost = f.squaredNorm();
  double damping = 1e-3;
  constexpr double kStep = 1e-7;
  for (int iter = 0; iter < 200 && f.cwiseAbs().maxCoeff() > target * 1e-2; ++iter) {
    Eigen::Matrix<double, 15, 6> jac;
    for (int k = 0; k < 6; ++k) {
      Params6 w = Params6::Zero();
      w(k) = kStep;
      const auto [pe, pn] = apply(r_e, r_n, w);
      w(k) = -kStep;
      const auto [me, mn] = apply(r_e, r_n, w);
      jac.col(k) = (fit.residual(pe, pn) - fit.residual(me, mn)) / (2 * kStep);
    }
    const Eigen::Matrix<double, 6, 6> jtj = jac.transpose() * jac;
    const Params6 jtf = jac.transpose() * f;
    bool accepted = false;
    for (int tries = 0; tries < 12; ++tries) {
      Eigen::Matrix<double, 6, 6> lhs = jtj;
      lhs.diagonal().array() += damping * (1.0 + jtj.diagonal().array());
      const Params6 step = -lhs.ldlt().solve(jtf);
      const auto [ne, nn] = apply(r_e, r_n, step);
      const Residual nf = fit.residual(ne, nn);
      const double ncost = nf.squaredNorm();
      if (ncost < cost) {
        r_e = ne;
        r_n = nn;
        f = nf;
        cost = ncost;
        damping = std::max(damping / 10, 1e-12);
        accepted = true;
        break;
      }
      damping *= 10;
    }
    if (!accepted) break;
  }
  return {r_e, r_n, f.cwiseAbs().maxCoeff()};
}

}  // namespace

TwoQubitState apply_local(const TwoQubitState& state, const Mat3& o_ee, const Mat3& o_nn) {
  for (const Mat3* r : {&o_ee, &o_nn}) {
    const double residual = rotation_residual(*r);
    if (!(residual <= 1e-10)) {
      std::ostringstream os;
      os << "local transformation needs proper rotations; orthogonality residual " << residual;
      throw ArgumentError(os.str());
    }
  }
  return rotate(state, o_ee, o_nn);
}

CanonicalForm diagonalize_cross(const Mat3& c) {
  Eigen::JacobiSVD<Mat3> svd(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3 u = svd.matrixU();
  Mat3 v = svd.matrixV();
  const Vec3 sv = svd.singularValues();  // descending
  // Make both factors proper by flipping the column of the smallest singular
  // value; track the resulting sign on that value.
  int parity = 1;
  if (u.determinant() < 0) {
    u.col(2) *= -1;
    parity = -parity;
  }
  if (v.determinant() < 0) {
    v.col(2) *= -1;
    parity = -parity;
  }
  CanonicalForm out;
  out.c = sv;
  out.o_ee = u;
  if (parity < 0 && sv(2) > 0) {
    // U diag(c1, c2, -c3) V^T = -U diag(c1, c2, c3) diag(-1, -1, 1) V^T.
    out.sign = -1;
    out.o_nn = Vec3(-1, -1, 1).asDiagonal() * v.transpose();
  } else {
    out.sign = 1;
    out.o_nn = v.transpose();
  }
  return out;
}

double pure_canonical(const TwoQubitState& state, double tol) {
  if (!purity_rank(state).pure) {
    throw PreconditionError("pure_canonical requires a pure state");
  }
  const double p = state.s.norm();
  const double q2 = std::max(0.0, 1.0 - p * p);
  const Vec3 c = diagonalize_cross(state.c).c;
  const double mismatch =
      std::max({std::abs(state.t.norm() - p), std::abs(c(0) - 1.0), std::abs(c(1) * c(1) - q2),
                std::abs(c(2) * c(2) - q2)});
  if (mismatch > tol) {
    std::ostringstream os;
    os << "pure state does not match the generic form (1, q, q) with |t| = |s|; mismatch "
       << mismatch;
    throw NumericalInconsistencyError(os.str());
  }
  return p;
}

Rank2Canonical rank2_canonical(const TwoQubitState& state, const Rank2Options& options) {
  const PurityRank pr = purity_rank(state);
  if (pr.rank != 2 || !pr.rank2_x_squared) {
    throw PreconditionError("rank2_canonical requires a state of rank 2");
  }

  // Support projector, as the "state" Pi/2.
  const HermitianEigen eig = hermitian_eigen(to_density_matrix(state).matrix());
  const Mat4c pi = eig.vectors.col(3) * eig.vectors.col(3).adjoint() +
                   eig.vectors.col(2) * eig.vectors.col(2).adjoint();
  const Mat4c pi_half = 0.5 * pi;
  const TwoQubitState support =
      from_density_matrix(DensityMatrix(0.5 * (pi_half + pi_half.adjoint())));

  // Pi/2 has s = cos g1 cos g2 e_3, t = sin g1 sin g2 n_3 and characteristic
  // values (sin g1 cos g2, cos g1 sin g2, 0) in its canonical frame.
  const CanonicalForm pform = diagonalize_cross(support.c);
  const double a = support.s.norm(), b = support.t.norm();
  const double sum = std::atan2(pform.c(0) + pform.c(1), a - b);
  const double diff = std::atan2(pform.c(0) - pform.c(1), a + b);
  constexpr double kHalfPi = std::numbers::pi / 2;
  Rank2Params params;
  params.gamma1 = std::clamp(0.5 * (sum + diff), 0.0, kHalfPi);
  params.gamma2 = std::clamp(0.5 * (sum - diff), 0.0, params.gamma1);

  const Rank2Fit fit(state, params.gamma1, params.gamma2);

  // Signed-SVD seeds: R_e C_Pi R_n = diag(c1, c2, 0), then the three
  // simultaneous two-axis flips that keep that diagonal.
  const Mat3 base_e = pform.o_ee.transpose();
  Mat3 base_n = pform.o_nn.transpose();
  if (pform.sign < 0) base_n = base_n * Vec3(-1, -1, 1).asDiagonal();
  const std::array<Vec3, 4> flips = {Vec3(1, 1, 1), Vec3(-1, 1, -1), Vec3(1, -1, -1),
                                     Vec3(-1, -1, 1)};

  std::mt19937_64 rng(options.seed);
  LmResult best{Mat3::Identity(), Mat3::Identity(), std::numeric_limits<double>::infinity()};
  int used = 0;
  const int total = std::max<int>(options.restarts, static_cast<int>(flips.size()));
  for (int k = 0; k < total; ++k) {
    Mat3 r_e, r_n;
    if (k < static_cast<int>(flips.size())) {
      const Mat3 f = flips[k].asDiagonal();
      r_e = f * base_e;
      r_n = base_n * f;
    } else {
      r_e = random_rotation(rng);
      r_n = random_rotation(rng);
    }
    const LmResult trial = levenberg_marquardt(fit, r_e, r_n, options.target_residual);
    ++used;
    if (trial.residual < best.residual) best = trial;
    if (best.residual <= options.target_residual) break;
  }

  params.x = fit.project(rotate(state, best.r_e, best.r_n));
  const double norm = params.x.norm();
  if (norm > 1.0) params.x /= norm;

  Rank2Canonical out;
  out.params = params;
  out.o_ee = best.r_e;
  out.o_nn = best.r_n;
  out.restarts_used = used;
  out.residual = max_abs_difference(rotate(state, best.r_e, best.r_n),
                                    construct_family(family::RankTwo{params}));
  if (!(out.residual <= options.max_residual)) {
    std::ostringstream os;
    os << "rank-2 reduction did not converge: best residual " << out.residual << " after "
       << used << " restarts";
    throw ConvergenceError(os.str(), out.residual);
  }
  return out;
}

}  // namespace qpair
