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

// Scalar-generic evaluation of the local and global invariants so the same
// formulas run in double and in quad precision.

#include <array>

#include "qpair/state.hpp"

namespace qpair::detail {

template <class T>
using M3 = std::array<std::array<T, 3>, 3>;
template <class T>
using V3 = std::array<T, 3>;

template <class T>
struct Invariants {
  T a2_1, a2_2, a2_3, a3_1, a3_2, a4_1, a4_2, a4_3, a4_4;
  T big_a2, big_a1, big_a0;
};

template <class T>
V3<T> mat_vec(const M3<T>& m, const V3<T>& v) {
  V3<T> out{};
  for (int i = 0; i < 3; ++i) {
    out[i] = T(0);
    for (int j = 0; j < 3; ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

template <class T>
V3<T> vec_mat(const V3<T>& v, const M3<T>& m) {
  V3<T> out{};
  for (int j = 0; j < 3; ++j) {
    out[j] = T(0);
    for (int i = 0; i < 3; ++i) out[j] += v[i] * m[i][j];
  }
  return out;
}

template <class T>
T dot(const V3<T>& a, const V3<T>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class T>
Invariants<T> evaluate_invariants(const TwoQubitState& state) {
  M3<T> c{};
  V3<T> s{}, t{};
  for (int i = 0; i < 3; ++i) {
    s[i] = T(state.s(i));
    t[i] = T(state.t(i));
    for (int j = 0; j < 3; ++j) c[i][j] = T(state.c(i, j));
  }
  // K = C^T C
  M3<T> k{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      k[i][j] = T(0);
      for (int a = 0; a < 3; ++a) k[i][j] += c[a][i] * c[a][j];
    }
  }
  M3<T> sub{};
  for (int i = 0; i < 3; ++i) {
    const int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
    for (int j = 0; j < 3; ++j) {
      const int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      sub[i][j] = c[i1][j1] * c[i2][j2] - c[i1][j2] * c[i2][j1];
    }
  }

  Invariants<T> r{};
  r.a2_1 = k[0][0] + k[1][1] + k[2][2];
  r.a2_2 = dot(s, s);
  r.a2_3 = dot(t, t);
  r.a3_1 = c[0][0] * sub[0][0] + c[0][1] * sub[0][1] + c[0][2] * sub[0][2];
  r.a3_2 = dot(s, mat_vec(c, t));
  r.a4_1 = T(0);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) r.a4_1 += k[i][j] * k[j][i];
  }
  r.a4_2 = dot(s, mat_vec(sub, t));
  const V3<T> sc = vec_mat(s, c);  // (C^T s)^T
  r.a4_3 = dot(sc, sc);
  const V3<T> ct = mat_vec(c, t);
  r.a4_4 = dot(ct, ct);

  r.big_a2 = T(2) * (r.a2_1 + r.a2_2 + r.a2_3);
  r.big_a1 = T(8) * (r.a3_2 - r.a3_1);
  const T diff = r.a2_2 - r.a2_3;
  r.big_a0 = r.a2_1 * r.a2_1 - T(2) * r.a2_1 * (r.a2_2 + r.a2_3) - diff * diff -
             T(2) * r.a4_1 - T(8) * r.a4_2 + T(4) * r.a4_3 + T(4) * r.a4_4;
  return r;
}

}  // namespace qpair::detail
