#include <gtest/gtest.h>

#include <cmath>

#include "modwave/elliptic.hpp"
#include "modwave/equations.hpp"
#include "modwave/poly.hpp"

using namespace modwave;

TEST(Potential, ZeroAtOrigin) { EXPECT_EQ(effective_potential(gkdv({0, 0, 1}), 0, 0, 0), 0.0); }

TEST(Potential, QuadraticNonlinearityValue) {
  EXPECT_NEAR(effective_potential(gkdv({0, 0, 1}), 1, 2, 1), 1.0 / 3.0, 1e-15);
}

TEST(Potential, EvenForSymmetricMkdv) {
  for (double u : {0.3, 1.0, 2.5}) {
    EXPECT_DOUBLE_EQ(effective_potential(mkdv(true), 0, -1, u), effective_potential(mkdv(true), 0, -1, -u));
  }
}

TEST(Potential, NonlocalRejected) {
  const EquationSpec s = equation_by_name("whitham");
  try {
    effective_potential(s, 0, 0, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonlocalUnsupported);
  }
}

TEST(Roots, KdvTransMap) {
  const WaveParams p = kdv_params_from_roots(3, 1, 0);
  EXPECT_DOUBLE_EQ(p.E, 0.0);
  EXPECT_DOUBLE_EQ(p.a, -0.5);
  EXPECT_NEAR(p.c, -4.0 / 3.0, 1e-15);
  const RootSet rs = potential_roots(potential_polynomial(kdv(), p));
  ASSERT_EQ(rs.real.size(), 3u);
  EXPECT_NEAR(rs.real[0], 0.0, 1e-12);
  EXPECT_NEAR(rs.real[1], 1.0, 1e-12);
  EXPECT_NEAR(rs.real[2], 3.0, 1e-12);
}

TEST(Roots, DoubleRootIsDegenerate) {
  try {
    potential_roots(potential_polynomial(kdv(), {0, 0, -1, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateRoots);
  }
}

TEST(Roots, DefocusingMkdvFourSymmetricRoots) {
  const RootSet rs = potential_roots(potential_polynomial(mkdv(false), {0, 0.3, 1, 0}));
  ASSERT_EQ(rs.real.size(), 4u);
  EXPECT_NEAR(rs.real[0], -rs.real[3], 1e-12);
  EXPECT_NEAR(rs.real[1], -rs.real[2], 1e-12);
}

TEST(Discriminant, KdvVanishesAtOrigin) {
  for (double c : {-2.0, 0.5, 3.0}) EXPECT_EQ(kdv_discriminant(0, 0, c), 0.0);
}

TEST(Discriminant, KdvClosedFormMatchesResultant) {
  const WaveParams p = kdv_params_from_roots(3, 1, 0);
  const double d = discriminant(potential_polynomial(kdv(), p));
  EXPECT_GT(kdv_discriminant(p.a, p.E, p.c), 0.0);
  EXPECT_NEAR(d / kdv_discriminant(p.a, p.E, p.c), 1.0, 1e-12);
}

TEST(Discriminant, MkdvTwoRealRootsNegative) {
  EXPECT_LT(discriminant(potential_polynomial(mkdv(true), {0, 0.5, -1, 0})), 0.0);
}

TEST(Classify, KdvInterval) {
  const ParameterClass pc = classify_parameters(kdv(), kdv_params_from_roots(3, 1, 0));
  ASSERT_EQ(pc.kind, ParameterClass::Periodic);
  EXPECT_NEAR(pc.selected.lo, 1.0, 1e-12);
  EXPECT_NEAR(pc.selected.hi, 3.0, 1e-12);
}

TEST(Classify, DnoidalTwoIntervals) {
  const ParameterClass pc = classify_parameters(mkdv(true), {0, -0.1, -1, 0});
  ASSERT_EQ(pc.kind, ParameterClass::Periodic);
  EXPECT_EQ(pc.intervals.size(), 2u);
}

TEST(Classify, OriginOnGamma) {
  EXPECT_EQ(classify_parameters(kdv(), {0, 0, -1, 0}).kind, ParameterClass::OnGamma);
}

TEST(Elliptic, DegenerateModulus) {
  EXPECT_DOUBLE_EQ(elliptic_K(0.0), M_PI / 2);
  for (double z : {0.0, 1.0, M_PI / 2}) EXPECT_NEAR(jacobi_cn(z, 0.0), std::cos(z), 1e-15);
}

TEST(Elliptic, SechLimit) {
  for (double z : {0.0, 0.5, 1.0, 2.0}) EXPECT_NEAR(jacobi_cn(z, 1 - 1e-8), 1.0 / std::cosh(z), 1e-3);
}

TEST(Elliptic, PythagoreanIdentities) {
  for (double m : {0.1, 0.5, 0.9, 0.999})
    for (double z : {0.3, 1.7, 4.2}) {
      const auto j = jacobi(z, m);
      EXPECT_NEAR(j.sn * j.sn + j.cn * j.cn, 1.0, 1e-13);
      EXPECT_NEAR(j.dn * j.dn + m * j.sn * j.sn, 1.0, 1e-13);
    }
}

TEST(Poly, RootsAndDeflation) {
  const Coeffs p{-6, 11, -6, 1};  // (x-1)(x-2)(x-3)
  const Coeffs q = deflate2(p, 1, 3);
  ASSERT_EQ(q.size(), 2u);
  EXPECT_NEAR(q[0], -2, 1e-14);
  EXPECT_NEAR(q[1], 1, 1e-14);
  EXPECT_NEAR(discriminant(p), 4.0, 1e-12);
}

TEST(Convention, FingerprintStable) {
  EXPECT_EQ(convention_fingerprint().size(), 16u);
  EXPECT_EQ(convention_fingerprint(), convention_fingerprint());
}
