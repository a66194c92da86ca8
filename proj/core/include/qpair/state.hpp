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

// Two-qubit states as (s, t, C): the Pauli vectors of both qubits and the
// cross dyadic C(a,b) = <sigma_a tau_b>, plus the 4x4 density-matrix view.
//
// Matrix conventions: basis |00>, |01>, |10>, |11> with the first index the
// first qubit, |0> the +1 eigenstate of sigma_z, standard Pauli matrices on
// both qubits, operators built as sigma (x) tau via the Kronecker product.

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <variant>

#include <Eigen/Dense>

namespace qpair {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec4c = Eigen::Vector4cd;
using Mat4c = Eigen::Matrix4cd;
using Mat2c = Eigen::Matrix2cd;

struct TwoQubitState {
  Vec3 s = Vec3::Zero();
  Vec3 t = Vec3::Zero();
  Mat3 c = Mat3::Zero();

  /// The totally mixed state: all 15 parameters zero.
  static TwoQubitState chaotic() { return {}; }

  friend bool operator==(const TwoQubitState& a, const TwoQubitState& b) {
    return a.s == b.s && a.t == b.t && a.c == b.c;
  }
};

/// Largest componentwise difference over all 15 parameters.
double max_abs_difference(const TwoQubitState& a, const TwoQubitState& b);

/// Thin wrapper marking a 4x4 complex matrix as a two-qubit operator in the
/// documented basis. Hermiticity and unit trace are checked where a
/// DensityMatrix is consumed (`from_density_matrix`), not here.
class DensityMatrix {
 public:
  DensityMatrix() = default;
  explicit DensityMatrix(const Mat4c& m) : m_(m) {}

  const Mat4c& matrix() const { return m_; }

 private:
  Mat4c m_ = Mat4c::Identity() / 4.0;
};

/// Normalized 4-vector with the global phase fixed: the first component whose
/// modulus exceeds 1e-12 is real and positive.
class PureStateVector {
 public:
  static PureStateVector from_amplitudes(const Vec4c& amplitudes);

  const Vec4c& amplitudes() const { return a_; }
  DensityMatrix projector() const;

 private:
  explicit PureStateVector(const Vec4c& a) : a_(a) {}
  Vec4c a_;
};

/// Parameters of the rank-2 generic form: (Sigma_0 + x . Sigma) / 2.
struct Rank2Params {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  Vec3 x = Vec3::Zero();
};

/// Throws ArgumentError unless pi/2 >= gamma1 >= gamma2 >= 0 and |x| <= 1.
void validate(const Rank2Params& params);

enum class ReflectionKind { kGlobal, kPartial };

namespace family {
struct Chaotic {};
struct Bell {
  Mat3 o_en = Mat3::Identity();
};
struct GenericPure {
  double p = 0.0;
};
struct Werner {
  double x = 0.0;
  Mat3 o_en = Mat3::Identity();
};
/// C = sign * O_en * diag(c), s = t = 0.
struct WernerFirst {
  int sign = -1;
  Vec3 c = Vec3::Zero();
  Mat3 o_en = Mat3::Identity();
};
/// (1 - x)/4 + x * P_pure(p), P_pure the generic pure state.
struct WernerSecond {
  double x = 0.0;
  double p = 0.5;
};
struct RankTwo {
  Rank2Params params;
};
}  // namespace family

using FamilySpec = std::variant<family::Chaotic, family::Bell, family::GenericPure,
                                family::Werner, family::WernerFirst,
                                family::WernerSecond, family::RankTwo>;

struct Table5Row {
  std::string observable;
  std::array<std::string, 3> labels;
  std::array<double, 3> values{};
};

/// Expectation values grouped by the five pairwise complementary
/// observables that together fix all 15 parameters.
struct Table5Report {
  std::array<Table5Row, 5> rows;

  TwoQubitState reassemble() const;
};

/// Coefficients of id*1 + s.sigma + t.tau + sigma.C.tau. A state is the
/// expansion with id = 1/4 and each vector/dyadic scaled by 1/4.
struct PauliExpansion {
  double id = 0.0;
  Vec3 s = Vec3::Zero();
  Vec3 t = Vec3::Zero();
  Mat3 c = Mat3::Zero();
};

const std::array<Mat2c, 3>& pauli_matrices();
Mat4c expand(const PauliExpansion& e);

DensityMatrix to_density_matrix(const TwoQubitState& state);

/// Inverse of to_density_matrix. Throws RepresentationError if the input is
/// not Hermitian or not of unit trace within `tol`.
TwoQubitState from_density_matrix(const DensityMatrix& m, double tol = 1e-10);

/// Pauli vectors of the two reduced states. With `verify`, also recomputes
/// them from explicit partial traces of the density matrix.
std::pair<Vec3, Vec3> reduced_states(const TwoQubitState& state, bool verify = false);

/// E = C - s t^T.
Mat3 entanglement_dyadic(const TwoQubitState& state);

/// Global: (s, t, C) -> (-s, -t, C). Partial: (s, t, C) -> (-s, t, -C).
TwoQubitState reflect(const TwoQubitState& state, ReflectionKind kind);

TwoQubitState mix(std::span<const TwoQubitState> states, std::span<const double> weights);

TwoQubitState construct_family(const FamilySpec& spec);

/// Sigma_0 .. Sigma_3 of the rank-2 generic form. Sigma_0 projects onto the
/// two-dimensional support; Sigma_1..3 act as Pauli operators on it.
std::array<Mat4c, 4> sigma_basis(double gamma1, double gamma2);
std::array<PauliExpansion, 4> sigma_basis_expansions(double gamma1, double gamma2);

Table5Report table_of_five(const TwoQubitState& state);

/// Ginibre-style sample G G^dagger / tr(G G^dagger) with G a 4 x k matrix of
/// standard complex normals, k = target_rank or 4.
TwoQubitState random_state(std::uint64_t seed, std::optional<int> target_rank = std::nullopt);

/// Haar-random proper rotation.
Mat3 random_rotation(std::mt19937_64& rng);

}  // namespace qpair
