#include <gtest/gtest.h>

#include <cmath>

#include "modwave/smallamp.hpp"

using namespace modwave;

namespace {
const DispersionSymbol W = DispersionSymbol::whitham();
}

TEST(Omega, ZeroModes) {
  for (int n : {-1, 0, 1}) EXPECT_EQ(omega(n, 0.0, 2.0, W), 0.0);
  const double w = omega(1, 0.1, 2.0, W);
  EXPECT_TRUE(std::isfinite(w));
  EXPECT_NEAR(omega(-1, -0.1, 2.0, W), -w, 1e-15);
}

TEST(Stokes, LeadingOrder) {
  const StokesWave s = stokes_expand(1.3, 0.01, 0.0, W);
  EXPECT_EQ(s.w0, 0.0);
  EXPECT_NEAR(s.c0, W(1.3), 1e-15);
  const StokesWave s2 = stokes_expand(2.0, 0.01, 0.0, W);
  EXPECT_NEAR(s2.harmonic2, 0.5 / (W(2.0) - W(4.0)), 1e-12);
}

TEST(Stokes, ResidualIsThirdOrder) {
  const double k = 1.3;
  std::vector<double> la, lr;
  for (double A : {1e-2, 5e-3, 2.5e-3}) {
    la.push_back(std::log(A));
    lr.push_back(std::log(stokes_residual(stokes_expand(k, A, 0.0, W), W)));
  }
  const double slope = (lr[2] - lr[0]) / (la[2] - la[0]);
  EXPECT_GE(slope, 2.9);
}

TEST(Mxi, ConstantBlock) {
  const double k = 1.5;
  MxiOptions literal;
  literal.constant_2A = false;
  const Matrix3c M = mxi_matrix(k, 0.0, 0.0, W, literal);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == 1 && j == 2)
        EXPECT_EQ(M(i, j), std::complex<double>(2.0, 0.0));
      else
        EXPECT_EQ(std::abs(M(i, j)), 0.0);
    }
  EXPECT_EQ(std::abs(mxi_matrix(k, 0.0, 0.0, W)(1, 2)), 0.0);
}

TEST(Mxi, ZeroAmplitudeEigenvalues) {
  const double k = 1.5, xi = 0.05;
  const Eigen::Vector3cd ev = mxi_matrix(k, 0.0, xi, W).eigenvalues();
  for (int n : {1, -1, 0}) {
    const std::complex<double> want(0.0, omega(n, xi, k, W));
    double best = 1e300;
    for (int j = 0; j < 3; ++j) best = std::min(best, std::abs(ev(j) - want));
    EXPECT_LT(best, 1e-12);
  }
  EXPECT_TRUE(identity_proj(k, 0.0, W).isIdentity(0.0));
}

TEST(Delta, ProductFormula) {
  for (double k : {1.0, 2.0})
    for (double xi : {1e-2, 1e-3}) {
      const double d = delta_discriminant(k, 0.0, xi, W);
      EXPECT_GT(d, 0.0);
      EXPECT_NEAR(d / delta_product_formula(k, xi, W), 1.0, 1e-10);
    }
}

TEST(Delta, EvenInAmplitude) {
  for (double k : {0.7, 1.5, 2.0}) {
    const double p = delta_discriminant(k, 1e-2, 1e-3, W), m = delta_discriminant(k, -1e-2, 1e-3, W);
    EXPECT_NEAR(p, m, 1e-10 * std::max(1.0, std::abs(p)));
  }
}

TEST(Delta, UnstableAboveCutoff) { EXPECT_LT(delta_discriminant(2.0, 1e-2, 1e-4, W), 0.0); }

TEST(Lambda, MatchesOracle) {
  for (double k : {0.5, 0.9, 1.4, 2.0}) {
    const double L = lambda_index(k, W).Lambda;
    EXPECT_NEAR(lambda_oracle(k, W) / L, 1.0, 1e-4);
  }
}

TEST(Lambda, KStar) {
  const KStar ks = find_kstar(W);
  EXPECT_EQ(ks.sign_changes, 1);
  EXPECT_NEAR(ks.kstar, 1.146, 1e-3);
  EXPECT_LT(ks.lo, ks.kstar);
  EXPECT_GT(ks.hi, ks.kstar);
}

TEST(Lambda, FractionalKdv) {
  EXPECT_LT(lambda_fkdv(1.0, 0.75), 0.0);
  EXPECT_GT(lambda_fkdv(1.0, 1.5), 0.0);
  EXPECT_EQ(lambda_fkdv(1.0, 1.0), 0.0);
  EXPECT_NEAR(lambda_index(1.0, DispersionSymbol::fkdv(1.0)).Lambda, 0.0, 1e-6);
  try {
    lambda_fkdv(1.0, 0.4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DomainError);
  }
}

TEST(Lambda, FractionalKdvClosedFormMatchesGeneral) {
  for (double a : {0.75, 1.5, 2.0})
    for (double k : {0.5, 1.0, 2.0}) {
      const double L = lambda_index(k, DispersionSymbol::fkdv(a)).Lambda;
      EXPECT_NEAR(lambda_fkdv(k, a) / L, 1.0, 1e-5);
    }
}

TEST(Ilw, GammaSeries) {
  for (double z : {1e-3, 1e-2}) EXPECT_NEAR(gamma_ilw(z) / (2 * std::pow(z, 4)), 1.0, 2 * z * z);
  for (double z : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    EXPECT_GT(gamma_ilw(z), 0.0);
    const double direct = 1 - 2 * z * z - std::cosh(2 * z) + 2 * z * std::sinh(2 * z);
    EXPECT_NEAR(gamma_ilw(z) / direct, 1.0, 1e-8);
  }
}

TEST(Ilw, DeltaPositive) {
  for (int i = 1; i <= 20; ++i)
    for (int j = 1; j <= 20; ++j) EXPECT_GT(delta_ilw(0.25 * i, 0.25 * j), 0.0);
}
