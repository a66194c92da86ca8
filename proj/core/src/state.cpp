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

#include "qpair/state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qpair/errors.hpp"
#include "qpair/linalg.hpp"

namespace qpair {
namespace {

Mat4c kron(const Mat2c& a, const Mat2c& b) {
  Mat4c out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

// sigma_a (x) 1, 1 (x) tau_b and sigma_a (x) tau_b, built once.
struct PauliProducts {
  std::array<Mat4c, 3> first;
  std::array<Mat4c, 3> second;
  std::array<std::array<Mat4c, 3>, 3> joint;

  PauliProducts() {
    const auto& p = pauli_matrices();
    for (int a = 0; a < 3; ++a) {
      first[a] = kron(p[a], Mat2c::Identity());
      second[a] = kron(Mat2c::Identity(), p[a]);
      for (int b = 0; b < 3; ++b) joint[a][b] = kron(p[a], p[b]);
    }
  }
};

const PauliProducts& products() {
  static const PauliProducts kProducts;
  return kProducts;
}

double real_trace_product(const Mat4c& a, const Mat4c& b) {
  // Re tr(a b) without forming the product.
  return (a.transpose().cwiseProduct(b)).sum().real();
}

void require_rotation(const Mat3& r, const char* what) {
  const double residual = rotation_residual(r);
  if (!(residual <= 1e-10)) {
    std::ostringstream os;
    os << what << " is not a proper rotation (residual " << residual << ")";
    throw ArgumentError(os.str());
  }
}

}  // namespace

double max_abs_difference(const TwoQubitState& a, const TwoQubitState& b) {
  return std::max({(a.s - b.s).cwiseAbs().maxCoeff(), (a.t - b.t).cwiseAbs().maxCoeff(),
                   (a.c - b.c).cwiseAbs().maxCoeff()});
}

PureStateVector PureStateVector::from_amplitudes(const Vec4c& amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw ArgumentError("pure state amplitudes must be finite and nonzero");
  }
  Vec4c a = amplitudes / norm;
  for (int k = 0; k < 4; ++k) {
    if (std::abs(a(k)) > 1e-12) {
      const Complex phase = std::conj(a(k)) / std::abs(a(k));
      a *= phase;
      a(k) = Complex(std::abs(a(k)), 0.0);
      break;
    }
  }
  return PureStateVector(a);
}

DensityMatrix PureStateVector::projector() const {
  return DensityMatrix(a_ * a_.adjoint());
}

void validate(const Rank2Params& params) {
  constexpr double kHalfPi = std::numbers::pi / 2;
  const double g1 = params.gamma1, g2 = params.gamma2;
  if (!(std::isfinite(g1) && std::isfinite(g2) && g1 <= kHalfPi + 1e-15 && g1 >= g2 &&
        g2 >= 0.0)) {
    std::ostringstream os;
    os << "rank-2 angles must satisfy pi/2 >= gamma1 >= gamma2 >= 0, got (" << g1 << ", "
       << g2 << ")";
    throw ArgumentError(os.str());
  }
  if (!params.x.allFinite() || params.x.squaredNorm() > 1.0 + 1e-12) {
    std::ostringstream os;
    os << "rank-2 coefficients must satisfy |x| <= 1, got |x|^2 = " << params.x.squaredNorm();
    throw ArgumentError(os.str());
  }
}

TwoQubitState Table5Report::reassemble() const {
  TwoQubitState out;
  for (int a = 0; a < 3; ++a) {
    out.s(a) = rows[a].values[0];
    out.t(a) = rows[a].values[1];
    out.c(a, a) = rows[a].values[2];
  }
  out.c(0, 1) = rows[3].values[0];
  out.c(1, 2) = rows[3].values[1];
  out.c(2, 0) = rows[3].values[2];
  out.c(1, 0) = rows[4].values[0];
  out.c(2, 1) = rows[4].values[1];
  out.c(0, 2) = rows[4].values[2];
  return out;
}

const std::array<Mat2c, 3>& pauli_matrices() {
  static const std::array<Mat2c, 3> kPauli = [] {
    const Complex i(0.0, 1.0);
    std::array<Mat2c, 3> p;
    p[0] << 0, 1, 1, 0;
    p[1] << 0, -i, i, 0;
    p[2] << 1, 0, 0, -1;
    return p;
  }();
  return kPauli;
}

Mat4c expand(const PauliExpansion& e) {
  const auto& pp = products();
  Mat4c m = e.id * Mat4c::Identity();
  for (int a = 0; a < 3; ++a) {
    if (e.s(a) != 0.0) m += e.s(a) * pp.first[a];
    if (e.t(a) != 0.0) m += e.t(a) * pp.second[a];
    for (int b = 0; b < 3; ++b) {
      if (e.c(a, b) != 0.0) m += e.c(a, b) * pp.joint[a][b];
    }
  }
  return m;
}

DensityMatrix to_density_matrix(const TwoQubitState& state) {
  return DensityMatrix(expand({0.25, state.s / 4, state.t / 4, state.c / 4}));
}

TwoQubitState from_density_matrix(const DensityMatrix& dm, double tol) {
  const Mat4c& m = dm.matrix();
  if (!m.allFinite()) throw RepresentationError("density matrix has non-finite entries");
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol) {
    std::ostringstream os;
    os << "density matrix is not Hermitian: max |M - M^dagger| = " << herm;
    throw RepresentationError(os.str());
  }
  const Complex trace = m.trace();
  if (std::abs(trace - 1.0) > tol) {
    std::ostringstream os;
    os << "density matrix trace is " << trace.real() << (trace.imag() >= 0 ? "+" : "")
       << trace.imag() << "i, deviation from 1 is " << std::abs(trace - 1.0);
    throw RepresentationError(os.str());
  }
  const auto& pp = products();
  TwoQubitState out;
  for (int a = 0; a < 3; ++a) {
    out.s(a) = real_trace_product(pp.first[a], m);
    out.t(a) = real_trace_product(pp.second[a], m);
    for (int b = 0; b < 3; ++b) out.c(a, b) = real_trace_product(pp.joint[a][b], m);
  }
  return out;
}

std::pair<Vec3, Vec3> reduced_states(const TwoQubitState& state, bool verify) {
  if (verify) {
    const Mat4c m = to_density_matrix(state).matrix();
    Mat2c rho1 = Mat2c::Zero(), rho2 = Mat2c::Zero();
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
          rho1(i, j) += m(2 * i + k, 2 * j + k);
          rho2(i, j) += m(2 * k + i, 2 * k + j);
        }
      }
    }
    const auto& p = pauli_matrices();
    double worst = 0.0;
    for (int a = 0; a < 3; ++a) {
      worst = std::max(worst, std::abs((p[a] * rho1).trace().real() - state.s(a)));
      worst = std::max(worst, std::abs((p[a] * rho2).trace().real() - state.t(a)));
    }
    if (worst > 1e-12) {
      std::ostringstream os;
      os << "partial traces disagree with Pauli vectors by " << worst;
      throw NumericalInconsistencyError(os.str());
    }
  }
  return {state.s, state.t};
}

Mat3 entanglement_dyadic(const TwoQubitState& state) {
  return state.c - state.s * state.t.transpose();
}

TwoQubitState reflect(const TwoQubitState& state, ReflectionKind kind) {
  switch (kind) {
    case ReflectionKind::kGlobal: return {-state.s, -state.t, state.c};
    case ReflectionKind::kPartial: return {-state.s, state.t, -state.c};
  }
  return state;
}

TwoQubitState mix(std::span<const TwoQubitState> states, std::span<const double> weights) {
  if (states.size() != weights.size() || states.empty()) {
    throw ArgumentError("mix needs one weight per state and at least one state");
  }
  double total = 0.0;
  TwoQubitState out;
  out.s.setZero();
  out.t.setZero();
  out.c.setZero();
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (!(weights[k] >= 0.0)) {
      std::ostringstream os;
      os << "mixing weight " << k << " is negative: " << weights[k];
      throw ArgumentError(os.str());
    }
    total += weights[k];
    out.s += weights[k] * states[k].s;
    out.t += weights[k] * states[k].t;
    out.c += weights[k] * states[k].c;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "mixing weights sum to " << total << ", not 1";
    throw ArgumentError(os.str());
  }
  return out;
}

std::array<PauliExpansion, 4> sigma_basis_expansions(double gamma1, double gamma2) {
  validate(Rank2Params{gamma1, gamma2, Vec3::Zero()});
  const double s1 = std::sin(gamma1), c1 = std::cos(gamma1);
  const double s2 = std::sin(gamma2), c2 = std::cos(gamma2);
  std::array<PauliExpansion, 4> e;

  e[0].id = 0.5;
  e[0].s(2) = 0.5 * c1 * c2;
  e[0].t(2) = 0.5 * s1 * s2;
  e[0].c(0, 0) = 0.5 * s1 * c2;
  e[0].c(1, 1) = 0.5 * c1 * s2;

  e[1].s(0) = 0.5 * s1;
  e[1].t(0) = 0.5 * c2;
  e[1].c(0, 2) = 0.5 * s2;
  e[1].c(2, 0) = 0.5 * c1;

  e[2].s(1) = 0.5 * s2;
  e[2].t(1) = 0.5 * c1;
  e[2].c(1, 2) = 0.5 * s1;
  e[2].c(2, 1) = 0.5 * c2;

  e[3].s(2) = 0.5 * s1 * s2;
  e[3].t(2) = 0.5 * c1 * c2;
  e[3].c(0, 0) = -0.5 * c1 * s2;
  e[3].c(1, 1) = -0.5 * s1 * c2;
  e[3].c(2, 2) = 0.5;
  return e;
}

std::array<Mat4c, 4> sigma_basis(double gamma1, double gamma2) {
  const auto e = sigma_basis_expansions(gamma1, gamma2);
  return {expand(e[0]), expand(e[1]), expand(e[2]), expand(e[3])};
}

TwoQubitState construct_family(const FamilySpec& spec) {
  struct Builder {
    TwoQubitState operator()(const family::Chaotic&) const { return {}; }

    TwoQubitState operator()(const family::Bell& f) const {
      require_rotation(f.o_en, "O_en");
      return {Vec3::Zero(), Vec3::Zero(), -f.o_en};
    }

    TwoQubitState operator()(const family::GenericPure& f) const {
      if (!(f.p >= 0.0 && f.p <= 1.0)) {
        throw ArgumentError("generic pure state needs 0 <= p <= 1");
      }
      const double q = std::sqrt(std::max(0.0, 1.0 - f.p * f.p));
      TwoQubitState out;
      out.s = Vec3(f.p, 0, 0);
      out.t = Vec3(-f.p, 0, 0);
      out.c = Vec3(-1.0, -q, -q).asDiagonal();
      return out;
    }

    TwoQubitState operator()(const family::Werner& f) const {
      if (!(f.x >= -1.0 / 3.0 && f.x <= 1.0)) {
        throw ArgumentError("Werner state needs -1/3 <= x <= 1");
      }
      require_rotation(f.o_en, "O_en");
      return {Vec3::Zero(), Vec3::Zero(), -f.x * f.o_en};
    }

    TwoQubitState operator()(const family::WernerFirst& f) const {
      if (f.sign != 1 && f.sign != -1) throw ArgumentError("sign must be +1 or -1");
      if (!f.c.allFinite() || !(f.c(0) >= f.c(1) && f.c(1) >= f.c(2) && f.c(2) >= 0.0)) {
        throw ArgumentError("characteristic values must satisfy c1 >= c2 >= c3 >= 0");
      }
      require_rotation(f.o_en, "O_en");
      TwoQubitState out;
      out.c = f.sign * f.o_en * f.c.asDiagonal();
      const double lo = min_eigenvalue(to_density_matrix(out).matrix());
      if (lo < -1e-12) {
        std::ostringstream os;
        os << "first-kind parameters give a non-positive operator, most negative eigenvalue "
           << lo;
        throw ValidityError(os.str(), lo);
      }
      return out;
    }

    TwoQubitState operator()(const family::WernerSecond& f) const {
      if (!(f.x >= -1.0 / 3.0 && f.x <= 1.0)) {
        throw ArgumentError("second-kind Werner state needs -1/3 <= x <= 1");
      }
      if (!(f.p > 0.0 && f.p < 1.0)) {
        throw ArgumentError("second-kind Werner state needs 0 < p < 1");
      }
      const TwoQubitState pure = (*this)(family::GenericPure{f.p});
      return {f.x * pure.s, f.x * pure.t, f.x * pure.c};
    }

    TwoQubitState operator()(const family::RankTwo& f) const {
      validate(f.params);
      const auto sigma = sigma_basis(f.params.gamma1, f.params.gamma2);
      Mat4c m = sigma[0];
      for (int k = 0; k < 3; ++k) m += f.params.x(k) * sigma[k + 1];
      return from_density_matrix(DensityMatrix(0.5 * m));
    }
  };
  return std::visit(Builder{}, spec);
}

Table5Report table_of_five(const TwoQubitState& state) {
  Table5Report r;
  const char* axis[] = {"x", "y", "z"};
  for (int a = 0; a < 3; ++a) {
    const std::string ax = axis[a];
    r.rows[a].observable = "sigma_" + ax + " and tau_" + ax;
    r.rows[a].labels = {"<sigma_" + ax + ">", "<tau_" + ax + ">",
                        "<sigma_" + ax + " tau_" + ax + ">"};
    r.rows[a].values = {state.s(a), state.t(a), state.c(a, a)};
  }
  r.rows[3].observable = "sigma_x tau_y and sigma_y tau_z";
  r.rows[3].labels = {"<sigma_x tau_y>", "<sigma_y tau_z>", "<sigma_z tau_x>"};
  r.rows[3].values = {state.c(0, 1), state.c(1, 2), state.c(2, 0)};
  r.rows[4].observable = "sigma_y tau_x and sigma_z tau_y";
  r.rows[4].labels = {"<sigma_y tau_x>", "<sigma_z tau_y>", "<sigma_x tau_z>"};
  r.rows[4].values = {state.c(1, 0), state.c(2, 1), state.c(0, 2)};
  return r;
}

TwoQubitState random_state(std::uint64_t seed, std::optional<int> target_rank) {
  const int k = target_rank.value_or(4);
  if (k < 1 || k > 4) throw ArgumentError("target rank must be in 1..4");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::Matrix<Complex, 4, Eigen::Dynamic> g(4, k);
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < 4; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  Mat4c m = g * g.adjoint();
  m /= m.trace().real();
  m = 0.5 * (m + m.adjoint()).eval();
  return from_density_matrix(DensityMatrix(m));
}

Mat3 random_rotation(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::Quaterniond q;
  do {
    const double w = normal(rng), x = normal(rng), y = normal(rng), z = normal(rng);
    q = Eigen::Quaterniond(w, x, y, z);
  } while (q.norm() < 1e-8);
  q.normalize();
  return q.toRotationMatrix();
}

}  // namespace qpair
