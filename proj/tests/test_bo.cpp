#include <gtest/gtest.h>

#include <cmath>

#include "modwave/bo.hpp"
#include "modwave/mi_index.hpp"

using namespace modwave;

TEST(BoProfile, CrestValue) {
  const BOParams p{0, 1, -2};
  const double D = p.c * p.c, Dk = D - p.k * p.k;
  const double want = (p.k * p.k / std::sqrt(Dk)) / (std::sqrt(D / Dk) - 1.0) - 0.5 * (std::abs(p.c) + p.c);
  EXPECT_NEAR(bo_eval(p, 0.0), want, 1e-14);
  EXPECT_NEAR(bo_eval(p, 0.0), 2.0 + std::sqrt(3.0), 1e-13);
}

TEST(BoProfile, Periodic) {
  const BOParams p{0.3, 0.7, -2.5};
  for (double z : {0.0, 0.4, 1.9, 5.0}) EXPECT_NEAR(bo_eval(p, z + 2 * M_PI / p.k), bo_eval(p, z), 1e-12);
}

TEST(BoProfile, ConstraintViolation) {
  for (const BOParams& p : {BOParams{0, 2, -2}, BOParams{0, 1, 2}, BOParams{1, 0.5, -2}}) {
    try {
      bo_eval(p, 0.0);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ConstraintViolation);
    }
  }
}

TEST(BoConserved, QuadratureMatchesClosedForms) {
  for (const BOParams& p : {BOParams{0, 1, -2}, BOParams{-0.4, 0.8, -1.5}, BOParams{0.2, 1.5, -3}}) {
    const int n = 8192;
    const double h = 2 * M_PI / p.k / n;
    double M = 0, P = 0;
    for (double u : bo_sample(p, n)) {
      M += u * h;
      P += 0.5 * u * u * h;
    }
    const BOConserved c = bo_conserved(p);
    EXPECT_NEAR(M, c.M, 1e-8);
    EXPECT_NEAR(P, c.P, 1e-8);
  }
}

TEST(BoConserved, DeterminantMagnitude) {
  // |{M,P}_{a,c}| = 2 pi^2 / (k sqrt(c^2 - 4a)); the derivative of the
  // closed forms gives the negative sign.
  for (const BOParams& p : {BOParams{0, 1, -2}, BOParams{-0.4, 0.8, -1.5}}) {
    const BOConserved c = bo_conserved(p);
    EXPECT_NEAR(std::abs(c.MP_ac) / bo_mp_closed_form(p), 1.0, 1e-12);
    // Finite-difference check of the determinant.
    const double h = 1e-5;
    auto M = [](BOParams q) { return bo_conserved(q).M; };
    auto P = [](BOParams q) { return bo_conserved(q).P; };
    const double Ma = (M({p.a + h, p.k, p.c}) - M({p.a - h, p.k, p.c})) / (2 * h);
    const double Mc = (M({p.a, p.k, p.c + h}) - M({p.a, p.k, p.c - h})) / (2 * h);
    const double Pa = (P({p.a + h, p.k, p.c}) - P({p.a - h, p.k, p.c})) / (2 * h);
    const double Pc = (P({p.a, p.k, p.c + h}) - P({p.a, p.k, p.c - h})) / (2 * h);
    EXPECT_NEAR((Ma * Pc - Mc * Pa) / c.MP_ac, 1.0, 1e-8);
  }
}

TEST(BoDispersion, ClosedFormEigenvalues) {
  const BODispersion d = bo_dispersion_matrix(1, -2);
  for (int j = 0; j < 3; ++j) {
    EXPECT_NEAR(d.eigenvalues[j].real(), d.closed_form[j], 1e-10 * d.closed_form[2]);
    EXPECT_EQ(d.eigenvalues[j].imag(), 0.0);
  }
  EXPECT_NEAR(d.D.trace(), M_PI * 2 * M_PI, 1e-12);
}

TEST(BoDispersion, RealDistinctOnGrid) {
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      const double c = -(0.5 + 0.3 * i), k = std::abs(c) * (0.05 + 0.09 * j);
      const BODispersion d = bo_dispersion_matrix(k, c);
      for (int l = 0; l < 3; ++l) EXPECT_EQ(d.eigenvalues[l].imag(), 0.0);
      EXPECT_GT(d.eigenvalues[1].real() - d.eigenvalues[0].real(), 0.0);
      EXPECT_GT(d.eigenvalues[2].real() - d.eigenvalues[1].real(), 0.0);
    }
}

TEST(BoGalilean, Identity) {
  const BOParams p{0, 1, -2};
  EXPECT_EQ(bo_galilean_residual(p, 0.0, 0.0), 0.0);
  EXPECT_LT(bo_galilean_residual(p, 0.1, 0.1), 1e-10);
  EXPECT_GT(bo_galilean_residual(p, 0.1, -0.1), 1e-3);
}

TEST(BoGalilean, SlopesShiftUniformly) {
  // Along the orbit c^2 - 4a is invariant, so the averaged-law slopes are too.
  const BOParams p{0, 1, -2};
  const double l = 0.1;
  const BOParams q{p.a - p.c * l + l * l, p.k, p.c - 2 * l};
  EXPECT_EQ(bo_whitham_slopes(p), bo_whitham_slopes(q));
}
