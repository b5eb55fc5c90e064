#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "modwave/waves.hpp"

namespace modwave {

// I_k is the finite-part loop integral of v^k P(v)^{-3/2} dv.
// Rows 0..n-2:   sum_j a_j I_{j+m}     = Z_m
// Rows n-1..2n-2: sum_j j a_j I_{j-1+k} = 2k Z_{k-1},  k = 0..n-1
struct PicardFuchsSystem {
  Eigen::MatrixXd sylvester;
  Eigen::VectorXd rhs;
  Coeffs poly;
  std::vector<double> zeta;
  int n = 0;
};

PicardFuchsSystem build_system(const PotentialPolynomial& poly, const MomentTable& zeta);

struct MomentSolution {
  std::vector<double> I;  // I_0..I_{2n-2}
  double cond = 0.0;      // condition number of the equilibrated matrix
  double residual = 0.0;  // |Ax - b| / |b|
};

MomentSolution solve_moments(const PicardFuchsSystem& sys, const Tolerances& tol = {});

// Extends I to index k_max through the first band, I_{m+n} = (Z_m - sum_{j<n} a_j I_{j+m}) / a_n;
// needs Z up to k_max - n.
std::vector<double> extend_moments(const PicardFuchsSystem& sys, std::vector<double> I, int k_max);

// J[r][col]: rows (T, M, P), columns (a, E, c).
using Matrix3 = std::array<std::array<double, 3>, 3>;

struct ParamJacobian {
  Matrix3 J{};
  double T = 0.0, M = 0.0, P = 0.0;
  double T_E = 0.0;
  double TM_aE = 0.0;   // {T,M}_{a,E}
  double TMP_aEc = 0.0; // {T,M,P}_{a,E,c}
  double TP_Ec = 0.0;   // {T,P}_{E,c}
  double MP_aE = 0.0;   // {M,P}_{a,E}
  double cond = 0.0;
};

// Fills the determinants from J.
ParamJacobian with_determinants(const Matrix3& J, double T, double M, double P);

ParamJacobian param_jacobian(const EquationSpec& spec, const WaveParams& p, int branch = 0,
                             const Tolerances& tol = {});

// Largest entrywise relative difference of A from the reference B. Entries
// with |A| <= 1e-12 max|B| (zero by symmetry) are measured against max|B|.
double jacobian_mismatch(const ParamJacobian& A, const ParamJacobian& B);

// Central finite differences of quadrature (T, M, P), two Richardson levels.
ParamJacobian fd_jacobian(const EquationSpec& spec, const WaveParams& p, int branch = 0,
                          double h_rel = 1e-3, const Tolerances& tol = {});

}  // namespace modwave
