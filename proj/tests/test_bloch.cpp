#include <gtest/gtest.h>

#include <cmath>

#include "modwave/bloch.hpp"
#include "modwave/mi_index.hpp"

using namespace modwave;

namespace {

double slope_error(const std::array<std::complex<double>, 3>& a, const Roots3& b) {
  double e = 0.0;
  for (auto x : a) {
    double best = 1e300;
    for (auto y : b) best = std::min(best, std::abs(x - y) / std::max(1.0, std::abs(y)));
    e = std::max(e, best);
  }
  return e;
}

double set_distance(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b) {
  double e = 0.0;
  for (auto x : a) {
    double best = 1e300;
    for (auto y : b) best = std::min(best, std::abs(x - y));
    e = std::max(e, best);
  }
  return e;
}

}  // namespace

TEST(LocalBloch, ConstantStateDispersion) {
  // A wave of tiny amplitude is close to the constant state at its mean.
  const EquationSpec s = kdv();
  const double T = 2 * M_PI, xi = 0.1, u0 = 0.4;
  const auto ev = local_constant_spectrum(s, u0, -1.0, T, xi, 8);
  for (int n = -8; n <= 8; ++n) {
    const double q = 2 * M_PI * n / T + xi;
    const std::complex<double> want(0.0, q * (-q * q - 1.0 + u0));
    double best = 1e300;
    for (auto z : ev) best = std::min(best, std::abs(z - want));
    EXPECT_LT(best, 1e-12);
  }
}

TEST(LocalBloch, KernelAtZeroFrequency) {
  const WaveProfile w = WaveProfile::resolve(kdv(), kdv_params_from_roots(3, 1, 0));
  const LocalBloch lb(w, 64);
  const BlochMatrix B = lb.assemble(0.0);
  // Fourier coefficients of u' from those of u.
  const int N = 64;
  const auto uh = fourier_coefficients(lb.samples(), N);
  Eigen::VectorXcd v(2 * N + 1);
  for (int n = -N; n <= N; ++n) v(n + N) = std::complex<double>(0, 2 * M_PI * n / w.period()) * uh[n + 2 * N];
  EXPECT_LE((B.L * v).norm(), 1e-6 * v.norm());
  // The n = 0 row carries a zero derivative factor at xi = 0.
  EXPECT_EQ(B.L.row(N).norm(), 0.0);
  EXPECT_GT(lb.assemble(0.01).L.row(N).norm(), 0.0);
}

TEST(LocalBloch, SlopesMatchTheory) {
  const WaveParams p = kdv_params_from_roots(3, 1, 0);
  const StabilityReport r = classify(kdv(), p);
  const LocalBloch lb(WaveProfile::resolve(kdv(), p), 64);
  const SlopeResult s = modulation_slopes(lb);
  EXPECT_LT(slope_error(s.slopes, r.bloch_slopes), 1e-3);
  std::complex<double> inv = 0;
  for (auto z : s.slopes) inv += 1.0 / z;
  EXPECT_LT(std::abs(inv), 1e-6);
  EXPECT_LT(truncation_change(lb, 1e-2), 1e-8);
}

TEST(LocalBloch, NormalizedFrameAgrees) {
  const WaveParams p = kdv_params_from_roots(3, 1, 0);
  const WaveProfile w = WaveProfile::resolve(kdv(), p);
  const SlopeResult a = modulation_slopes(LocalBloch(w, 48, BlochFrame::Physical));
  const SlopeResult b = modulation_slopes(LocalBloch(w, 48, BlochFrame::Normalized));
  for (int j = 0; j < 3; ++j) EXPECT_NEAR(std::abs(a.slopes[j] - b.slopes[j]), 0.0, 1e-6);
}

TEST(LocalBloch, MkdvCnoidalComplexSlopes) {
  const WaveParams p{0, 0.5, -1, 0};
  const StabilityReport r = classify(mkdv(true), p);
  const LocalBloch lb(WaveProfile::resolve(mkdv(true), p), 64);
  const SlopeResult s = modulation_slopes(lb);
  int complex_count = 0;
  for (auto z : s.slopes) complex_count += std::abs(z.imag()) > 1e-4;
  EXPECT_EQ(complex_count, 2);
  EXPECT_LT(slope_error(s.slopes, r.bloch_slopes), 1e-3);
}

TEST(LocalBloch, DnoidalSlopesMatchTheory) {
  const WaveParams p{0, -0.1, -1, 0};
  const StabilityReport r = classify(mkdv(true), p, 1);
  const LocalBloch lb(WaveProfile::resolve(mkdv(true), p, 1), 64);
  EXPECT_LT(slope_error(modulation_slopes(lb).slopes, r.bloch_slopes), 1e-3);
}

TEST(LocalBloch, BubbleScan) {
  const std::vector<double> grid{0.005, 0.01, 0.02, 0.05, 0.1, 0.2};
  const LocalBloch kd(WaveProfile::resolve(kdv(), kdv_params_from_roots(3, 1, 0)), 64);
  EXPECT_LT(instability_bubble_scan(kd, grid).max_real, 1e-8);
  const LocalBloch mk(WaveProfile::resolve(mkdv(true), {0, 0.5, -1, 0}), 64);
  const BubbleScan b = instability_bubble_scan(mk, grid);
  EXPECT_GT(b.max_real, 1e-3);
  const BubbleScan b2 = instability_bubble_scan(*mk.with_modes(128), grid);
  EXPECT_LT(std::abs(b2.max_real - b.max_real), 1e-6);
}

TEST(LocalBloch, RecommendedModes) {
  EXPECT_EQ(recommended_modes(WaveProfile::resolve(kdv(), kdv_params_from_roots(3, 1, 0))), 64);
  // 256 exactly when 64 modes fail the tail check.
  for (double beta : {0.5, 1e-2, 1e-4}) {
    const WaveProfile w = WaveProfile::resolve(kdv(), kdv_params_from_roots(3, beta, 0));
    bool resolved = true;
    try {
      LocalBloch(w, 64).assemble(0.1);
    } catch (const Error& e) {
      resolved = e.code() != ErrorCode::ResolutionError;
    }
    EXPECT_EQ(recommended_modes(w), resolved ? 64 : 256) << beta;
  }
}

TEST(LocalBloch, ResolutionError) {
  // Near the solitary limit eight modes cannot resolve f'(u).
  const WaveProfile w = WaveProfile::resolve(kdv(), kdv_params_from_roots(3, 0.01, 0));
  try {
    LocalBloch(w, 8).assemble(0.1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ResolutionError);
  }
}

TEST(NonlocalBloch, WhithamConstantState) {
  const auto W = DispersionSymbol::whitham();
  const double k = 1.0, xi = 0.1;
  const auto prob = make_stokes_problem(stokes_expand(k, 0.0, 0.0, W), W, 32);
  const auto ev = eigenvalues(prob->assemble(xi));
  std::vector<std::complex<double>> want;
  for (int n = -32; n <= 32; ++n) want.emplace_back(0.0, omega(n, xi, k, W));
  EXPECT_LT(set_distance(ev, want), 1e-12);
  EXPECT_LT(set_distance(want, ev), 1e-12);
}

TEST(NonlocalBloch, BoTripleZero) {
  const auto bo = make_bo_problem({0, 1, -2}, 64);
  const auto ev = nearest_zero(bo->assemble(1e-3), 4);
  for (int j = 0; j < 3; ++j) EXPECT_LT(std::abs(ev[j]), 1e-2);
  EXPECT_GT(std::abs(ev[3]), 0.1);
}

TEST(NonlocalBloch, BoSpectrumImaginary) {
  const auto bo = make_bo_problem({0, 1, -2}, 64);
  EXPECT_LT(instability_bubble_scan(*bo, {0.01, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5}).max_real, 1e-8);
}

TEST(NonlocalBloch, BoSlopesMatchAveragedLaws) {
  for (const BOParams& p : {BOParams{0, 1, -2}, BOParams{-0.3, 0.6, -1.5}}) {
    const auto bo = make_bo_problem(p, 64);
    const auto w = bo_whitham_slopes(p);
    const SlopeResult s = modulation_slopes(*bo);
    for (int j = 0; j < 3; ++j) EXPECT_NEAR(std::abs(s.slopes[j] - w[j]), 0.0, 1e-6);
    EXPECT_LT(truncation_change(*bo, 1e-2), 1e-8);
  }
}

TEST(Slopes, RejectsZeroFrequency) {
  const LocalBloch lb(WaveProfile::resolve(kdv(), kdv_params_from_roots(3, 1, 0)), 16);
  EXPECT_THROW(modulation_slopes(lb, {1e-2, 0.0}), Error);
}
