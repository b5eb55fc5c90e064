#include <gtest/gtest.h>

#include <cmath>

#include "modwave/bo.hpp"
#include "modwave/waves.hpp"

using namespace modwave;

TEST(Quadrature, KdvPeriodMatchesCnoidal) {
  const TMPH q = quadrature_TMPH(kdv(), kdv_params_from_roots(3, 1, 0));
  EXPECT_NEAR(q.T / cnoidal_period(3, 1, 0), 1.0, 1e-9);
}

TEST(Quadrature, HarmonicLimit) {
  // KdV well centred at u* where V'(u*) = 0: V = u^3/6 + (c/2)u^2 - a u.
  const double a = 0.0, c = -1.0, us = 2.0;
  const EquationSpec s = kdv();
  const double Vmin = effective_potential(s, a, c, us);
  const double V2 = us + c;
  const double eps = 1e-6 * std::abs(Vmin);
  const TMPH q = quadrature_TMPH(s, {a, Vmin + eps, c, 0});
  EXPECT_NEAR(q.T / (2 * M_PI / std::sqrt(V2)), 1.0, 1e-2);
}

TEST(Quadrature, MomentsReproduceT) {
  const WaveParams p = kdv_params_from_roots(3, 1, 0);
  const MomentTable m = zeta_moments(kdv(), p, 4);
  const TMPH q = quadrature_TMPH(kdv(), p);
  EXPECT_NEAR(m.T() / q.T, 1.0, 1e-10);
  EXPECT_NEAR(m.M() / q.M, 1.0, 1e-10);
  EXPECT_NEAR(m.P() / q.P, 1.0, 1e-10);
  const double mean = m.zeta[1] / m.zeta[0];
  EXPECT_GT(mean, 1.0);
  EXPECT_LT(mean, 3.0);
}

TEST(Quadrature, SchamelMatchesDirectU) {
  // Direct u-quadrature with the sin^2 substitution in u.
  const EquationSpec s = schamel();
  const WaveParams p{0, -0.001, -1, 0};
  const ParameterClass pc = classify_parameters(s, p);
  const double lo = pc.selected.lo, hi = pc.selected.hi;
  const int n = 200000;
  double T = 0.0;
  for (int j = 0; j < n; ++j) {
    const double th = (j + 0.5) * M_PI / (2 * n);
    const double u = lo + (hi - lo) * std::sin(th) * std::sin(th);
    const double W = p.E - effective_potential(s, p.a, p.c, u);
    T += 2.0 * (hi - lo) * std::sin(th) * std::cos(th) / std::sqrt(2 * W) * (M_PI / (2 * n));
  }
  T *= 2.0;
  EXPECT_NEAR(quadrature_TMPH(s, p).T / T, 1.0, 1e-6);
}

TEST(Quadrature, BoMassAtZeroA) {
  const BOParams p{0, 1, -2};
  const int n = 4096;
  double M = 0.0;
  for (double u : bo_sample(p, n)) M += u * (2 * M_PI / n);
  EXPECT_NEAR(M, 2 * M_PI - M_PI * (std::abs(p.c) + p.c), 1e-8);
}

TEST(Profile, CnoidalAgreement) {
  const WaveProfile w = WaveProfile::resolve(kdv(), kdv_params_from_roots(3, 1, 0));
  EXPECT_NEAR(w.period(), cnoidal_period(3, 1, 0), 1e-9);
  // The resolved profile starts at the trough; the cn^2 form at the crest.
  for (int j = 0; j < 40; ++j) {
    const double z = w.period() * j / 40.0;
    EXPECT_NEAR(w(z), cnoidal_eval(3, 1, 0, w.period() / 2, z), 1e-10);
  }
  EXPECT_NEAR(cnoidal_eval(3, 1, 0, 0.7, -0.7), 3.0, 1e-14);
  EXPECT_NEAR(cnoidal_eval(3, 1, 0, 0.0, cnoidal_period(3, 1, 0) / 2), 1.0, 1e-12);
}

TEST(Profile, CnoidalOdeResidual) {
  const double h = 1e-5;
  for (int j = 0; j < 30; ++j) {
    const double z = 0.27 * j;
    const double u = cnoidal_eval(3, 1, 0, 0, z);
    const double uz = (cnoidal_eval(3, 1, 0, 0, z + h) - cnoidal_eval(3, 1, 0, 0, z - h)) / (2 * h);
    EXPECT_NEAR(uz * uz, (3 - u) * (u - 1) * (u - 0) / 3.0, 1e-8);
  }
}

TEST(Profile, DnoidalOdeResidual) {
  const double E = -0.1, c = -1.0, h = 1e-5;
  for (int j = 0; j < 30; ++j) {
    const double z = 0.31 * j;
    const double u = dnoidal_eval(E, c, z);
    const double uz = (dnoidal_eval(E, c, z + h) - dnoidal_eval(E, c, z - h)) / (2 * h);
    EXPECT_NEAR(uz * uz, 2 * E - c * u * u - u * u * u * u / 6.0, 1e-8);
  }
}

TEST(Profile, DnoidalConstantLimit) {
  const double c = -1.0, E = -0.75 * c * c;
  const Dnoidal d = dnoidal_params(E, c);
  EXPECT_NEAR(d.m, 0.0, 1e-14);
  EXPECT_NEAR(dnoidal_eval(E, c, 0.3), dnoidal_eval(E, c, 2.1), 1e-14);
}

TEST(Profile, DnoidalMatchesQuadrature) {
  const WaveProfile w = WaveProfile::resolve(mkdv(true), {0, -0.1, -1, 0}, 1);
  const Dnoidal d = dnoidal_params(-0.1, -1);
  EXPECT_NEAR(w.period(), d.period, 1e-9);
  // Profile starts at the trough u_minus; the dn form starts at the crest.
  for (int j = 0; j < 20; ++j) {
    const double z = d.period * j / 20.0;
    EXPECT_NEAR(w(z), dnoidal_eval(-0.1, -1, z + d.period / 2), 1e-9);
  }
}

TEST(Profile, DnoidalSolitaryScale) {
  // As E -> 0-, the crest approaches the solitary-wave amplitude sqrt(-6c).
  const double c = -1.0;
  EXPECT_NEAR(dnoidal_eval(-1e-10, c, 0.0), std::sqrt(-6 * c), 1e-4);
}

TEST(Profile, Evenness) {
  const WaveProfile w = WaveProfile::resolve(schamel(), {0, -0.001, -1, 0});
  for (int j = 0; j < 16; ++j) EXPECT_NEAR(w(0.4 * j), w(-0.4 * j), 1e-13);
}

TEST(Waves, NoBoundedOrbit) {
  try {
    quadrature_TMPH(kdv(), {-1, 0, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_TRUE(e.code() == ErrorCode::NoBoundedOrbit || e.code() == ErrorCode::OnGamma);
  }
}
