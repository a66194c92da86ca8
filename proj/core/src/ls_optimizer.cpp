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

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/tools/toms748_solve.hpp>

#include "nelder_mead.hpp"
#include "qpair/classify.hpp"
#include "qpair/degree.hpp"
#include "qpair/errors.hpp"
#include "qpair/linalg.hpp"

namespace qpair {
namespace {

// Eigenvalue threshold separating the range of the state from its kernel.
constexpr double kRangeThreshold = 1e-10;

double lowest(const Mat4c& m) {
  Eigen::SelfAdjointEigenSolver<Mat4c> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

struct Outcome {
  bool feasible = false;
  double mu = 1;        // weight of the pure part
  double penalty = 0;   // largest tube-shifted PPT eigenvalue when infeasible (< 0)
};

// For fixed psi the residual X(mu) = rho - mu |psi><psi| is positive for
// mu <= mu_pos, and g(mu) = lambda_min(X(mu)^reflected) is concave in mu.
// Feasibility is h(mu) = g(mu) + tube (1 - mu) >= 0, i.e. the normalized
// separable part has a reflected spectrum no lower than -tube; h is concave
// too, so feasible mu form an interval whose lower end is bracketed and
// refined with TOMS 748.
//
// The tube matters for rank-deficient states: a separable part confined to
// a two-dimensional range always has a singular partial reflection, and the
// exactly feasible pure parts form a set of measure zero.
Outcome smallest_pure_weight(const Mat4c& reflected_rho, const Vec4c& psi, double mu_pos,
                             double tol, double tube) {
  const Mat4c a = partial_reflect_matrix(psi * psi.adjoint());
  auto h = [&](double mu) { return lowest(reflected_rho - mu * a) + tube * (1.0 - mu); };

  const double h0 = h(0.0);
  if (h0 >= 0.0) return {true, 0.0, 0.0};
  if (!(mu_pos > 0.0)) return {false, 1.0, h0};

  double hi = std::min(mu_pos, 1.0);
  double h_hi = h(hi);
  if (h_hi < 0.0) {
    // Golden-section search for a point where the concave h turns positive.
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 0.0, top = hi;
    double m1 = top - ratio * (top - lo), m2 = lo + ratio * (top - lo);
    double h1 = h(m1), h2 = h(m2);
    double best = std::max({h0, h_hi, h1, h2});
    bool found = false;
    for (int iter = 0; iter < 100 && top - lo > 1e-13; ++iter) {
      if (h1 >= 0.0 || h2 >= 0.0) {
        hi = h1 >= 0.0 ? m1 : m2;
        h_hi = h1 >= 0.0 ? h1 : h2;
        found = true;
        break;
      }
      if (h1 < h2) {
        lo = m1;
        m1 = m2;
        h1 = h2;
        m2 = lo + ratio * (top - lo);
        h2 = h(m2);
      } else {
        top = m2;
        m2 = m1;
        h2 = h1;
        m1 = top - ratio * (top - lo);
        h1 = h(m1);
      }
      best = std::max({best, h1, h2});
    }
    if (!found) return {false, 1.0, std::min(best, -1e-300)};
  }
  if (h_hi == 0.0) return {true, hi, 0.0};

  std::uintmax_t max_iter = 200;
  const auto bracket = boost::math::tools::toms748_solve(
      h, 0.0, hi, h0, h_hi, [tol](double l, double r) { return r - l <= tol; }, max_iter);
  return {true, bracket.second, 0.0};
}

// Hyperspherical angles <-> unit vectors in R^(n+1).
Eigen::VectorXd unit_from_angles(const Eigen::VectorXd& theta) {
  const Eigen::Index n = theta.size();
  Eigen::VectorXd u(n + 1);
  double prod = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    u(i) = prod * std::cos(theta(i));
    prod *= std::sin(theta(i));
  }
  u(n) = prod;
  return u;
}

Eigen::VectorXd angles_from_unit(const Eigen::VectorXd& u) {
  const Eigen::Index n = u.size() - 1;
  Eigen::VectorXd theta(n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    theta(i) = std::atan2(u.tail(n - i).norm(), u(i));
  }
  if (n > 0) theta(n - 1) = std::atan2(u(n), u(n - 1));
  return theta;
}

// Pure parts restricted to the range of the state: psi = V z with z in
// C^r, z_0 real. 2r - 2 angles; six for a full-rank state.
class RangeProblem {
 public:
  RangeProblem(const Mat4c& rho, const LsOptions& options)
      : reflected_(partial_reflect_matrix(rho)), options_(options) {
    const HermitianEigen eig = hermitian_eigen(rho);
    for (int k = 3; k >= 0; --k) {
      if (eig.values(k) > kRangeThreshold) {
        basis_.push_back(eig.vectors.col(k));
        weights_.push_back(eig.values(k));
      }
    }
  }

  int rank() const { return static_cast<int>(basis_.size()); }
  int dimension() const { return 2 * rank() - 2; }

  Eigen::VectorXcd coefficients(const Eigen::VectorXd& theta) const {
    const Eigen::VectorXd u = unit_from_angles(theta);
    Eigen::VectorXcd z(rank());
    z(0) = u(0);
    for (int k = 1; k < rank(); ++k) z(k) = Complex(u(2 * k - 1), u(2 * k));
    return z;
  }

  Eigen::VectorXd random_angles(std::mt19937_64& rng) const {
    std::normal_distribution<double> normal;
    Eigen::VectorXcd z(rank());
    for (int k = 0; k < rank(); ++k) z(k) = Complex(normal(rng), normal(rng));
    if (std::abs(z(0)) > 0) z *= std::conj(z(0)) / std::abs(z(0));
    Eigen::VectorXd u(2 * rank() - 1);
    u(0) = z(0).real();
    for (int k = 1; k < rank(); ++k) {
      u(2 * k - 1) = z(k).real();
      u(2 * k) = z(k).imag();
    }
    return angles_from_unit(u.normalized());
  }

  Vec4c psi(const Eigen::VectorXcd& z) const {
    Vec4c v = Vec4c::Zero();
    for (int k = 0; k < rank(); ++k) v += z(k) * basis_[k];
    return v;
  }

  double mu_pos(const Eigen::VectorXcd& z) const {
    double inv = 0;
    for (int k = 0; k < rank(); ++k) inv += std::norm(z(k)) / weights_[k];
    return 1.0 / inv;
  }

  Outcome solve(const Eigen::VectorXd& theta, double tube) const {
    const Eigen::VectorXcd z = coefficients(theta);
    return smallest_pure_weight(reflected_, psi(z), mu_pos(z), options_.tol, tube);
  }

  // Minimized by Nelder-Mead: -lambda when feasible, the PPT violation when not.
  double objective(const Eigen::VectorXd& theta, double tube) const {
    const Outcome o = solve(theta, tube);
    return o.feasible ? -(1.0 - o.mu) : -o.penalty;
  }

  const Vec4c& dominant() const { return basis_.front(); }

 private:
  Mat4c reflected_;
  LsOptions options_;
  std::vector<Vec4c> basis_;
  std::vector<double> weights_;
};

void fill_margins(LsDecomposition& d) {
  const Mat4c m = to_density_matrix(d.sep).matrix();
  d.sep_positivity_margin = min_eigenvalue(m);
  d.sep_ppt_margin = min_eigenvalue(partial_reflect_matrix(m));
}

void require_valid(const TwoQubitState& state, const char* op) {
  if (!is_state(state).decision) throw PreconditionError(std::string(op) + " requires a valid state");
}

}  // namespace

double ls_lambda_for_pure(const TwoQubitState& state, const PureStateVector& psi, double tol,
                          double separability_tol) {
  require_valid(state, "ls_lambda_for_pure");
  if (!(tol > 0.0) || !(separability_tol >= 0.0)) throw ArgumentError("tolerances must be positive");
  const Mat4c rho = to_density_matrix(state).matrix();
  const Vec4c& v = psi.amplitudes();

  // Largest mu with rho - mu |psi><psi| >= 0: 1 / <psi| rho^+ |psi> on the
  // range, 0 if psi leaks into the kernel.
  const HermitianEigen eig = hermitian_eigen(rho);
  double inv = 0, leak = 0;
  for (int k = 0; k < 4; ++k) {
    const double w = std::norm(eig.vectors.col(k).dot(v));
    if (eig.values(k) > kRangeThreshold) {
      inv += w / eig.values(k);
    } else {
      leak += w;
    }
  }
  const double mu_pos = leak > kRangeThreshold ? 0.0 : 1.0 / inv;

  const Outcome o =
      smallest_pure_weight(partial_reflect_matrix(rho), v, mu_pos, tol, separability_tol);
  if (!o.feasible) return 0.0;

  // The returned endpoint is re-checked against both constraints.
  const Mat4c residual = rho - o.mu * v * v.adjoint();
  const double pos = min_eigenvalue(residual);
  const double ppt = min_eigenvalue(partial_reflect_matrix(residual));
  const double lambda = 1.0 - o.mu;
  if (pos < -1e-12 || ppt < -separability_tol * lambda - 1e-12) {
    std::ostringstream os;
    os << "bracketed endpoint mu = " << o.mu << " fails re-check (positivity " << pos
       << ", partial reflection " << ppt << ")";
    throw NumericalInconsistencyError(os.str());
  }
  return std::clamp(lambda, 0.0, 1.0);
}

LsDecomposition ls_optimize(const TwoQubitState& state, const LsOptions& options) {
  require_valid(state, "ls_optimize");
  if (options.restarts < 1) throw ArgumentError("restarts must be at least 1");
  if (!(options.tol > 0.0)) throw ArgumentError("tolerance must be positive");

  LsDecomposition out;
  if (is_separable(state).decision) {
    out.lambda = 1.0;
    out.sep = state;
    out.separable_input = true;
    fill_margins(out);
    return out;
  }

  const Mat4c rho = to_density_matrix(state).matrix();
  const RangeProblem problem(rho, options);
  if (problem.rank() == 1) {
    // An entangled pure state: nothing separable can be split off.
    out.lambda = 0.0;
    out.pure = PureStateVector::from_amplitudes(problem.dominant());
    out.sep = TwoQubitState::chaotic();
    fill_margins(out);
    return out;
  }

  // Restarts run in a wide feasibility tube; the winner is then followed
  // while the tube narrows to the separability tolerance.
  constexpr double kSearchTube = 1e-4;
  double tube = std::max(kSearchTube, options.separability_tol);
  const auto f = [&problem, &tube](const Eigen::VectorXd& theta) {
    return problem.objective(theta, tube);
  };
  detail::NelderMeadOptions nm;
  nm.max_evaluations = options.max_evaluations;

  std::mt19937_64 rng(options.seed);
  Eigen::VectorXd best_theta;
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < options.restarts; ++k) {
    const Eigen::VectorXd start =
        k == 0 ? Eigen::VectorXd(Eigen::VectorXd::Zero(problem.dimension()))
               : problem.random_angles(rng);
    const detail::NelderMeadResult r = detail::nelder_mead(f, start, nm);
    if (r.value < best) {
      best = r.value;
      best_theta = r.x;
    }
    out.restarts_used = k + 1;
    if (options.record_history) out.history.emplace_back(k, best <= 0 ? -best : 0.0);
  }

  detail::NelderMeadOptions refine = nm;
  refine.initial_step = 0.02;
  for (;;) {
    const detail::NelderMeadResult r = detail::nelder_mead(f, best_theta, refine);
    if (r.value < f(best_theta)) best_theta = r.x;
    if (tube <= options.separability_tol) break;
    tube = std::max(tube * 1e-2, options.separability_tol);
    refine.initial_step = std::max(refine.initial_step * 0.1, 1e-5);
  }

  const Outcome o = problem.solve(best_theta, options.separability_tol);
  const Vec4c psi = problem.psi(problem.coefficients(best_theta));
  out.pure = PureStateVector::from_amplitudes(psi);
  if (!o.feasible) {
    // Lower-bound semantics: no decomposition found means only lambda >= 0.
    out.lambda = 0.0;
    out.pure.reset();
    out.sep = TwoQubitState::chaotic();
    fill_margins(out);
    return out;
  }
  out.lambda = std::clamp(1.0 - o.mu, 0.0, 1.0);
  const Mat4c pure_part = psi * psi.adjoint();
  if (out.lambda > 1e-12) {
    Mat4c sep = (rho - o.mu * pure_part) / out.lambda;
    sep = 0.5 * (sep + sep.adjoint()).eval();
    sep /= sep.trace().real();
    out.sep = from_density_matrix(DensityMatrix(sep), 1e-8);
  } else {
    out.lambda = 0.0;
    out.sep = TwoQubitState::chaotic();
  }
  fill_margins(out);
  return out;
}

}  // namespace qpair
