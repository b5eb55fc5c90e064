#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <vector>

namespace modwave {

// Periodic Benjamin-Ono waves of period 2 pi / k; the profile satisfies
// Lambda u - c u - u^2 = a with Lambda = |D|.
struct BOParams {
  double a = 0.0;
  double k = 1.0;
  double c = -2.0;
};

// ConstraintViolation unless c < 0 and k^2 < c^2 - 4a.
void bo_check(const BOParams& p);
double bo_eval(const BOParams& p, double z);
std::vector<double> bo_sample(const BOParams& p, int n);  // u(j T / n)

struct BOConserved {
  double M, P;
  double M_a, M_c, P_a, P_c;
  double MP_ac;  // det d(M,P)/d(a,c)
};
BOConserved bo_conserved(const BOParams& p);
// The displayed closed form 2 pi^2 / (k sqrt(c^2 - 4a)).
double bo_mp_closed_form(const BOParams& p);

struct BODispersion {
  Eigen::Matrix3d D;
  std::array<std::complex<double>, 3> eigenvalues;  // numeric, sorted by real part
  std::array<double, 3> closed_form;                // {-s, s, pi T} sorted, s = pi T sqrt(2 - (cT)^-2)
};
BODispersion bo_dispersion_matrix(double k, double c);

// max |u(z; a - c lambda + s^2, k, c - 2 s) - u(z; a, k, c) - lambda| on a grid.
double bo_galilean_residual(const BOParams& p, double lambda, double s, int n = 256);

// Modulation slopes lambda / (i xi) (physical xi) from the averaged
// mass, momentum and wave-number conservation laws: {-k, k, sqrt(c^2 - 4a)}.
std::array<double, 3> bo_whitham_slopes(const BOParams& p);

}  // namespace modwave
