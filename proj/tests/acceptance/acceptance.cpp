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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Tolerances and limits are fixed below and are not configurable.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracle.hpp"
#include "qpair/canonical.hpp"
#include "qpair/classify.hpp"
#include "qpair/degree.hpp"
#include "qpair/errors.hpp"
#include "qpair/invariants.hpp"
#include "qpair/io.hpp"

namespace qpair {
namespace {

constexpr double kInvariantRel = 1e-10;
constexpr double kInvariantFloor = 1e-12;  // |a| below this is compared absolutely
constexpr double kSpectrumAbs = 1e-9;
constexpr double kDecisionTol = 1e-9;
constexpr double kDegreeAbs = 5e-3;
constexpr double kBellFidelity = 0.999;
constexpr double kSigmaAbs = 1e-12;
constexpr double kPureSweepAbs = 1e-10;
constexpr double kPureCanonicalAbs = 1e-9;
constexpr double kQ0LimitAbs = 1e-6;
constexpr double kQ0WindowAbs = 1e-8;
constexpr double kContinuityAbs = 1e-3;
constexpr double kRoundingSlack = 1e-12;  // analytically equal closed forms
constexpr double kContinuityStep = 1e-4;
constexpr double kFastLimitSeconds = 10;
constexpr double kWernerLimitSeconds = 60;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Notes {
 public:
  template <class... Args>
  void add(const char* fmt, Args... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, fmt, args...);
    if (!text_.empty()) text_ += "; ";
    text_ += buf;
  }
  const std::string& str() const { return text_; }

 private:
  std::string text_;
};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double bell_fidelity(const PureStateVector& psi) {
  return std::norm(testing::singlet().dot(psi.amplitudes()));
}

double gamma2_for(double gamma1, double theta) {
  return std::atan(std::cos(2 * theta) * std::tan(gamma1));
}

// 1. Local invariance and the action of the partial reflection.
Outcome local_invariance() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(1001);
  double worst = 0, worst_reflection = 0;
  bool flips_ok = true;
  for (int k = 0; k < 1000; ++k) {
    const TwoQubitState st = testing::sample_state(rng, 1 + k % 4);
    const Mat2c u1 = testing::random_su2(rng), u2 = testing::random_su2(rng);
    // Rotate through the density matrix, independently of apply_local.
    const Mat4c u = testing::kron(u1, u2);
    const TwoQubitState moved =
        testing::oracle_parameters(u * testing::oracle_density(st) * u.adjoint());
    const auto a = local_invariants(st).as_array();
    const auto b = local_invariants(moved).as_array();
    const auto r = local_invariants(reflect(st, ReflectionKind::kPartial)).as_array();
    for (int i = 0; i < 9; ++i) {
      const double scale = std::max(std::abs(a[i]), kInvariantFloor);
      worst = std::max(worst, std::abs(a[i] - b[i]) / scale);
      const bool flipped = i == 3 || i == 6;
      const double expected = flipped ? -a[i] : a[i];
      worst_reflection = std::max(worst_reflection, std::abs(r[i] - expected) / scale);
      // The flipped ones really change sign (not just vanish).
      if (flipped && std::abs(a[i]) > 1e-6 && std::signbit(a[i]) == std::signbit(r[i])) {
        flips_ok = false;
      }
    }
  }
  const double elapsed = seconds_since(t0);
  Notes n;
  n.add("1000 states x SU(2)xSU(2): max rel change %.2e (limit %.0e)", worst, kInvariantRel);
  n.add("partial reflection max rel dev %.2e, sign flips %s", worst_reflection,
        flips_ok ? "ok" : "missing");
  n.add("%.2f s (limit %.0f s)", elapsed, kFastLimitSeconds);
  return {worst <= kInvariantRel && worst_reflection <= kInvariantRel && flips_ok &&
              elapsed < kFastLimitSeconds,
          n.str()};
}

// 2. Quartic-root spectrum against a Jacobi eigensolve.
Outcome spectrum_agreement_suite() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(1002);
  double worst = 0, worst_pure = 0;
  int pure = 0;
  for (int k = 0; k < 1000; ++k) {
    const int rank = k % 5 == 0 ? 1 : 1 + k % 4;
    const TwoQubitState st = testing::sample_state(rng, rank);
    const SpectrumResult sp = spectrum(st);
    const Eigen::Vector4d ref = testing::oracle_eigenvalues(testing::oracle_density(st));
    double gap = 0;
    for (int i = 0; i < 4; ++i) gap = std::max(gap, std::abs(sp.eigenvalues[i] - ref(i)));
    worst = std::max(worst, gap);
    if (rank == 1) {
      ++pure;
      worst_pure = std::max(worst_pure, gap);
    }
  }
  const double elapsed = seconds_since(t0);
  Notes n;
  n.add("1000 states (%d pure): max |d eig| %.2e, pure %.2e (limit %.0e)", pure, worst,
        worst_pure, kSpectrumAbs);
  n.add("%.2f s (limit %.0f s)", elapsed, kFastLimitSeconds);
  return {worst <= kSpectrumAbs && pure >= 100 && elapsed < kFastLimitSeconds, n.str()};
}

// 3. Positivity: invariant inequalities vs eigenvalue signs.
Outcome positivity_equivalence() {
  std::mt19937_64 rng(1003);
  int valid_agree = 0, invalid_agree = 0, boundary = 0;
  for (int k = 0; k < 1000; ++k) {
    const TwoQubitState st = testing::sample_state(rng, 1 + k % 4);
    const Verdict v = is_state(st, kDecisionTol);
    const bool truth = testing::oracle_min_eigenvalue(testing::oracle_density(st)) >= -kDecisionTol;
    valid_agree += v.decision == truth && truth;
    boundary += v.boundary;

    // Push the same direction outward until positivity clearly fails.
    TwoQubitState big = st;
    for (double f = 1.25;; f *= 1.25) {
      big = {f * st.s, f * st.t, f * st.c};
      if (testing::oracle_min_eigenvalue(testing::oracle_density(big)) < -1e-3) break;
    }
    const Verdict w = is_state(big, kDecisionTol);
    const bool truth_big =
        testing::oracle_min_eigenvalue(testing::oracle_density(big)) >= -kDecisionTol;
    invalid_agree += w.decision == truth_big && !truth_big;
    boundary += w.boundary;
  }
  Notes n;
  n.add("valid %d/1000, over-scaled invalid %d/1000 agree at tol %.0e", valid_agree,
        invalid_agree, kDecisionTol);
  n.add("%d boundary verdicts", boundary);
  return {valid_agree == 1000 && invalid_agree == 1000, n.str()};
}

// 4. Separability: invariant form vs explicit partial transpose.
Outcome separability_equivalence() {
  std::mt19937_64 rng(1004);
  int agree = 0, separable = 0;
  for (int k = 0; k < 2000; ++k) {
    const TwoQubitState st = testing::sample_state(rng, 1 + k % 4);
    const bool truth = testing::oracle_min_eigenvalue(testing::oracle_partial_transpose(
                           testing::oracle_density(st))) >= -kDecisionTol;
    separable += truth;
    agree += is_separable(st, kDecisionTol).decision == truth;
  }
  const bool at = is_separable(construct_family(family::Werner{1.0 / 3.0}), kDecisionTol).decision;
  const bool past =
      is_separable(construct_family(family::Werner{1.0 / 3.0 + 1e-6}), kDecisionTol).decision;
  Notes n;
  n.add("%d/2000 agree (%d separable)", agree, separable);
  n.add("Werner x=1/3 %s, x=1/3+1e-6 %s", at ? "separable" : "entangled",
        past ? "separable" : "entangled");
  return {agree == 2000 && at && !past, n.str()};
}

// 5. Werner closed form vs optimizer.
Outcome werner_vs_optimizer() {
  bool pass = true;
  Notes n;
  for (double x : {0.4, 0.5, 2.0 / 3.0, 0.9, 1.0}) {
    const auto t0 = Clock::now();
    const LsDecomposition d = ls_optimize(construct_family(family::Werner{x}));
    const double elapsed = seconds_since(t0);
    const double exact = degree_werner(x);
    const double fid = d.pure ? bell_fidelity(*d.pure) : 0;
    pass &= std::abs(d.lambda - exact) <= kDegreeAbs && fid >= kBellFidelity &&
            elapsed < kWernerLimitSeconds;
    n.add("x=%.4f lambda %.6f vs %.6f F %.6f %.1fs", x, d.lambda, exact, fid, elapsed);
  }
  return {pass, n.str()};
}

// 6. First-kind closed form vs optimizer on random non-trivial triples.
Outcome first_kind_vs_optimizer() {
  std::mt19937_64 rng(1006);
  std::uniform_real_distribution<double> u(0, 1);
  double worst = 0;
  int done = 0, tries = 0;
  while (done < 10) {
    ++tries;
    Vec3 c(u(rng), u(rng), u(rng));
    std::sort(c.data(), c.data() + 3, std::greater<>());
    TwoQubitState st;
    try {
      st = construct_family(family::WernerFirst{-1, c, random_rotation(rng)});
    } catch (const ValidityError&) {
      continue;
    }
    const double exact = degree_werner_first(st);
    if (exact >= 1.0 - 1e-3) continue;  // trivial branch or too close to it
    LsOptions o;
    o.seed = done;
    const LsDecomposition d = ls_optimize(st, o);
    worst = std::max(worst, std::abs(d.lambda - exact));
    ++done;
  }
  Notes n;
  n.add("10 triples (%d drawn): max |lambda - S| %.2e (limit %.0e)", tries, worst, kDegreeAbs);
  return {worst <= kDegreeAbs, n.str()};
}

// 7. Second-kind closed form: boundary, limit, window, optimizer.
Outcome second_kind_checks() {
  bool pass = true;
  Notes n;
  double worst_limit = 0, worst_window = 0;
  int window_points = 0;
  bool boundary_exact = true;
  for (double p : {0.2, 0.45, 0.6, 0.8, 0.95}) {
    const double q = std::sqrt(1 - p * p);
    boundary_exact &= degree_werner_second(1 / (1 + 2 * q), p).s == 1.0;
    const WernerSecondDegree top = degree_werner_second(1.0, p);
    worst_limit = std::max({worst_limit, std::abs(*top.q0 - q), std::abs(top.s)});
    const double lo = 1 / (1 + 2 * q), hi = std::min(1.0, werner_second_bell_window_end(p));
    for (int k = 1; k < 8 && lo < hi; ++k) {
      const WernerSecondDegree w = degree_werner_second(lo + (hi - lo) * k / 8.0, p);
      worst_window = std::max(worst_window, std::abs(*w.q0 - 1.0));
      ++window_points;
    }
  }
  pass &= boundary_exact && worst_limit <= kQ0LimitAbs && worst_window <= kQ0WindowAbs &&
          window_points > 0;
  n.add("S(x=1/(1+2q))==1 %s", boundary_exact ? "yes" : "no");
  n.add("x=1 max(|q0-q|,S) %.2e (limit %.0e)", worst_limit, kQ0LimitAbs);
  n.add("window %d pts max |q0-1| %.2e (limit %.0e)", window_points, worst_window, kQ0WindowAbs);
  const std::array<std::array<double, 2>, 3> points = {{{0.5, 0.6}, {0.8, 0.6}, {0.9, 0.3}}};
  for (const auto& [x, p] : points) {
    const double exact = degree_werner_second(x, p).s;
    const LsDecomposition d = ls_optimize(construct_family(family::WernerSecond{x, p}));
    pass &= std::abs(d.lambda - exact) <= kDegreeAbs;
    n.add("(x=%.2f,p=%.2f) lambda %.6f vs %.6f", x, p, d.lambda, exact);
  }
  return {pass, n.str()};
}

Rank2Params random_rank2(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0, 1);
  std::normal_distribution<double> g;
  Rank2Params p;
  p.gamma1 = 0.2 + 1.2 * u(rng);
  p.gamma2 = 0.05 + (p.gamma1 - 0.1) * u(rng);
  Vec3 dir(g(rng), g(rng), g(rng));
  p.x = (0.1 + 0.85 * u(rng)) * dir.normalized();
  return p;
}

// 8. Rank-2 closed form vs optimizer, branch consistency, continuity.
Outcome rank2_vs_optimizer() {
  std::mt19937_64 rng(1008);
  double worst = 0;
  int consistent = 0, holds = 0, done = 0, skipped = 0;
  while (done < 20) {
    const Rank2Params p = random_rank2(rng);
    const TwoQubitState generic = construct_family(family::RankTwo{p});
    if (is_separable(generic).decision) {
      ++skipped;
      continue;
    }
    const TwoQubitState st = apply_local(generic, random_rotation(rng), random_rotation(rng));
    const DegreeResult closed = degree(st);
    LsOptions o;
    o.seed = done;
    const LsDecomposition d = ls_optimize(st, o);
    const double gap = std::abs(d.lambda - closed.s);
    worst = std::max(worst, gap);
    if (closed.method == DegreeMethod::kClosedFormRank2) {
      const Rank2Params& cp = *closed.family_data->rank2;
      const bool branch = rank2_branch_inequality(cp);
      holds += branch;
      const double chosen = branch ? rank2_formula_bc(cp) : rank2_formula_a(cp);
      const double other = branch ? rank2_formula_a(cp) : rank2_formula_bc(cp);
      // The selected formula is the one the optimizer lands on.
      consistent += std::abs(d.lambda - chosen) <= kDegreeAbs &&
                    std::abs(d.lambda - chosen) <= std::abs(d.lambda - other) + 1e-6;
    }
    ++done;
  }

  // Continuity: locate branch flips along x3 and step 1e-4 across each.
  double worst_jump = 0;
  int crossings = 0;
  std::mt19937_64 rng2(2008);
  while (crossings < 20) {
    Rank2Params p = random_rank2(rng2);
    const double r12 = std::hypot(p.x(0), p.x(1));
    if (r12 > 0.9) continue;
    const double reach = std::sqrt(1 - r12 * r12) - 1e-3;
    auto at = [&](double x3) {
      Rank2Params q = p;
      q.x(2) = x3;
      return q;
    };
    constexpr int kGrid = 200;
    for (int k = 0; k < kGrid && crossings < 20; ++k) {
      double lo = -reach + 2 * reach * k / kGrid, hi = -reach + 2 * reach * (k + 1) / kGrid;
      const bool blo = rank2_branch_inequality(at(lo));
      if (blo == rank2_branch_inequality(at(hi))) continue;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (rank2_branch_inequality(at(mid)) == blo ? lo : hi) = mid;
      }
      const double m = 0.5 * (lo + hi);
      const double a = m - kContinuityStep / 2, b = m + kContinuityStep / 2;
      if (std::abs(a) > reach || std::abs(b) > reach) continue;
      worst_jump = std::max(worst_jump, std::abs(degree_rank2(at(a)).s - degree_rank2(at(b)).s));
      ++crossings;
    }
  }

  Notes n;
  n.add("20 entangled params (%d separable skipped): max |lambda - S| %.2e (limit %.0e)",
        skipped, worst, kDegreeAbs);
  n.add("branch predicate consistent %d/20 (inequality held in %d)", consistent, holds);
  n.add("%d boundary crossings, max |dS| %.2e for step %.0e (limit %.0e)", crossings,
        worst_jump, kContinuityStep, kContinuityAbs);
  return {worst <= kDegreeAbs && consistent == 20 && worst_jump <= kContinuityAbs, n.str()};
}

// 9. Sigma algebra.
Outcome sigma_algebra() {
  std::mt19937_64 rng(1009);
  std::uniform_real_distribution<double> u(0, std::numbers::pi / 2);
  const Complex i(0, 1);
  double worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    double g1 = u(rng), g2 = u(rng);
    if (g1 < g2) std::swap(g1, g2);
    const auto s = sigma_basis(g1, g2);
    worst = std::max(worst, std::abs(s[0].trace() - 2.0));
    worst = std::max(worst, (s[0] * s[0] - s[0]).cwiseAbs().maxCoeff());
    for (int k = 1; k <= 3; ++k) {
      worst = std::max(worst, std::abs(s[k].trace()));
      worst = std::max(worst, (s[0] * s[k] - s[k]).cwiseAbs().maxCoeff());
      worst = std::max(worst, (s[k] * s[0] - s[k]).cwiseAbs().maxCoeff());
    }
    for (int j = 1; j <= 3; ++j) {
      for (int k = 1; k <= 3; ++k) {
        Mat4c expected = (j == k ? 1.0 : 0.0) * s[0];
        if (j != k) {
          const int l = 6 - j - k;
          const double sign = ((k - j + 3) % 3 == 1) ? 1.0 : -1.0;  // epsilon_jkl
          expected += i * sign * s[l];
        }
        worst = std::max(worst, (s[j] * s[k] - expected).cwiseAbs().maxCoeff());
      }
    }
  }
  Notes n;
  n.add("100 (g1, g2): max identity residual %.2e (limit %.0e)", worst, kSigmaAbs);
  return {worst <= kSigmaAbs, n.str()};
}

// 10. Generic pure sweep.
Outcome generic_pure_sweep() {
  double worst_inv = 0, worst_c = 0;
  bool separable_ok = true;
  for (int k = 0; k <= 10; ++k) {
    const double p = k / 10.0, q = std::sqrt(1 - p * p);
    const TwoQubitState st = construct_family(family::GenericPure{p});
    const GlobalInvariants g = global_invariants(local_invariants(st));
    worst_inv = std::max({worst_inv, std::abs(g.a2 - g.a1 + g.a0 - 1), std::abs(2 * g.a2 - g.a1 - 4),
                          std::abs(g.a2 - 6)});
    separable_ok &= is_separable(st, kDecisionTol).decision == (k == 10);
    const Vec3 c = diagonalize_cross(st.c).c;
    worst_c = std::max(worst_c, (c - Vec3(1, q, q)).cwiseAbs().maxCoeff());
  }
  Notes n;
  n.add("invariant equalities max residual %.2e (limit %.0e)", worst_inv, kPureSweepAbs);
  n.add("separable iff p=1: %s", separable_ok ? "yes" : "no");
  n.add("c=(1,q,q) max dev %.2e (limit %.0e)", worst_c, kPureCanonicalAbs);
  return {worst_inv <= kPureSweepAbs && separable_ok && worst_c <= kPureCanonicalAbs, n.str()};
}

// 11. Reflection mixtures P_y = (1+y)/2 P + (1-y)/2 Pbar.
Outcome reflection_mixtures() {
  std::vector<TwoQubitState> states;
  for (const auto& [x, p] : std::array<std::array<double, 2>, 5>{
           {{0.6, 0.5}, {0.7, 0.3}, {0.8, 0.6}, {0.9, 0.8}, {0.75, 0.9}}}) {
    states.push_back(construct_family(family::WernerSecond{x, p}));
  }
  std::mt19937_64 rng(1011);
  while (states.size() < 10) {
    const Rank2Params p = random_rank2(rng);
    const TwoQubitState st = construct_family(family::RankTwo{p});
    if (is_separable(st).decision || st.s.norm() < 0.05 || st.t.norm() < 0.05) continue;
    states.push_back(st);
  }
  bool pass = true;
  double worst_under = -1, worst_closed = 1;
  int k = 0;
  for (const TwoQubitState& st : states) {
    const DegreeResult exact = degree(st);
    const TwoQubitState bar = reflect(st, ReflectionKind::kGlobal);
    auto mixture = [&](double y) {
      const std::array<TwoQubitState, 2> parts = {st, bar};
      const std::array<double, 2> w = {(1 + y) / 2, (1 - y) / 2};
      return mix(parts, w);
    };
    const double s0 = degree_werner_first(mixture(0.0));
    worst_closed = std::min(worst_closed, s0 - exact.s);
    pass &= s0 >= exact.s - kRoundingSlack && !exact.lower_bound;
    for (double y : {0.25, 0.5, 0.75}) {
      LsOptions o;
      o.seed = static_cast<std::uint64_t>(k);
      const double lambda = ls_optimize(mixture(y), o).lambda;
      worst_under = std::max(worst_under, exact.s - lambda);
      pass &= lambda >= exact.s - kDegreeAbs;
    }
    ++k;
  }
  Notes n;
  n.add("10 states (5 second-kind, 5 rank-2): min S(P_0)-S(P) %.3e (limit -%.0e)", worst_closed,
        kRoundingSlack);
  n.add("y in {0.25,0.5,0.75}: max S(P)-lambda(P_y) %.2e (limit %.0e)", worst_under, kDegreeAbs);
  return {pass, n.str()};
}

// 12. Serialization round trip and CLI determinism.
Outcome cli_round_trip() {
  std::mt19937_64 rng(1012);
  int exact = 0;
  for (int k = 0; k < 100; ++k) {
    const TwoQubitState st = testing::sample_state(rng, 1 + k % 4);
    const std::string text = serialize_state(st);
    const TwoQubitState back = parse_state(text);
    exact += back == st && serialize_state(back) == text;
  }

  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "qpair_acceptance";
  fs::create_directories(dir);
  const std::string file = (dir / "state.json").string();
  auto run = [](const std::vector<std::string>& args) {
    std::ostringstream out;
    const int code = cli::run(args, out);
    return std::pair<int, std::string>{code, out.str()};
  };
  int identical = 0, total = 0;
  const auto gen = run({"random", "--seed", "12", "--output", file});
  const std::vector<std::vector<std::string>> commands = {
      {"random", "--seed", "12"},
      {"invariants", file},
      {"classify", file},
      {"canonical", file, "--seed", "3"},
      {"degree", file, "--seed", "3", "--restarts", "8"},
      {"decompose", file, "--seed", "3", "--restarts", "8", "--pretty"},
      {"expectations", file},
  };
  for (const auto& args : commands) {
    const auto a = run(args), b = run(args);
    ++total;
    identical += a.first == 0 && a == b;
  }
  fs::remove_all(dir);
  Notes n;
  n.add("serialize/parse exact on %d/100 states", exact);
  n.add("CLI reports byte-identical on %d/%d repeated commands", identical, total);
  return {exact == 100 && gen.first == 0 && identical == total, n.str()};
}

}  // namespace
}  // namespace qpair

int main() {
  using namespace qpair;
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
      {"local invariance", local_invariance},
      {"spectrum agreement", spectrum_agreement_suite},
      {"positivity equivalence", positivity_equivalence},
      {"separability equivalence", separability_equivalence},
      {"Werner vs optimizer", werner_vs_optimizer},
      {"first kind vs optimizer", first_kind_vs_optimizer},
      {"second kind", second_kind_checks},
      {"rank two vs optimizer", rank2_vs_optimizer},
      {"Sigma algebra", sigma_algebra},
      {"generic pure sweep", generic_pure_sweep},
      {"reflection mixtures", reflection_mixtures},
      {"CLI round trip", cli_round_trip},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %2zu %-26s %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
