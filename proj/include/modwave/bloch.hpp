#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <memory>
#include <vector>

#include "modwave/bo.hpp"
#include "modwave/smallamp.hpp"
#include "modwave/waves.hpp"

namespace modwave {

// Physical: Fourier modes exp(i(2 pi n / T + xi) x), xi in [-pi/T, pi/T).
// Normalized: xi in [-1/2, 1/2); for local problems q_n = 2 pi (n + xi) / T,
// for nonlocal problems the 2 pi-periodic frame with derivative i(n + xi) and
// symbol m(k(n + xi)), k = 2 pi / T.
enum class BlochFrame { Physical, Normalized };

struct BlochMatrix {
  Eigen::MatrixXcd L;
  int N = 0;
  double xi = 0.0;
  double tail = 0.0;  // relative Fourier tail energy of the coefficient function
};

class BlochProblem {
 public:
  virtual ~BlochProblem() = default;
  virtual BlochMatrix assemble(double xi) const = 0;
  virtual std::unique_ptr<BlochProblem> with_modes(int N) const = 0;
  // d(physical xi) / d(xi) times the time scaling, so that slopes in the
  // problem frame divided by this give lambda / (i xi_physical).
  virtual double slope_scale() const = 0;
  virtual double period() const = 0;
  virtual int modes() const = 0;
};

// Fourier coefficients g_j, j = -2N..2N (stored at j + 2N), of periodic
// samples; `tail` receives the relative energy in |j| > N.
std::vector<std::complex<double>> fourier_coefficients(const std::vector<double>& samples, int N,
                                                       double* tail = nullptr);

// L = d/dz (d^2/dz^2 + c + f'(u))
class LocalBloch : public BlochProblem {
 public:
  LocalBloch(const WaveProfile& profile, int N = 64, BlochFrame frame = BlochFrame::Physical);
  BlochMatrix assemble(double xi) const override;
  std::unique_ptr<BlochProblem> with_modes(int N) const override;
  double slope_scale() const override;
  double period() const override { return T_; }
  int modes() const override { return N_; }
  const std::vector<double>& samples() const { return u_; }

 private:
  LocalBloch() = default;
  void prepare();
  std::shared_ptr<const WaveProfile> profile_;
  int N_ = 64;
  BlochFrame frame_ = BlochFrame::Physical;
  double T_ = 0.0, c_ = 0.0;
  std::vector<double> u_;
  std::vector<std::complex<double>> g_;  // coefficients of f'(u), index j + 2N
  double tail_ = 0.0;
};

// 64 modes for smooth waves, 256 when 64 cannot resolve f'(u) (near the
// solitary-wave limit).
int recommended_modes(const WaveProfile& profile);

// Constant state u = u0 of a local equation (linear dispersion check).
std::vector<std::complex<double>> local_constant_spectrum(const EquationSpec& spec, double u0,
                                                          double c, double T, double xi, int N);

// L = d/dx (-M + c - f'(u)) with M the Fourier multiplier of `sym`.
class NonlocalBloch : public BlochProblem {
 public:
  // u(x) sampled uniformly on one period [0, T); f ascending polynomial.
  NonlocalBloch(DispersionSymbol sym, std::vector<double> samples, double T, double c, Coeffs f,
                int N = 64, BlochFrame frame = BlochFrame::Physical);
  BlochMatrix assemble(double xi) const override;
  std::unique_ptr<BlochProblem> with_modes(int N) const override;
  double slope_scale() const override { return 1.0; }
  double period() const override { return T_; }
  int modes() const override { return N_; }

 private:
  void prepare();
  DispersionSymbol sym_;
  std::vector<double> u_;
  double T_, c_;
  Coeffs f_;
  int N_;
  BlochFrame frame_;
  std::vector<std::complex<double>> g_;
  double tail_ = 0.0;
};

// Benjamin-Ono wave: Lambda u - c u - u^2 = a is the nonlocal form with
// symbol 1 - |k|, speed 1 - c and f = u^2. Samples on 16N points.
std::unique_ptr<NonlocalBloch> make_bo_problem(const BOParams& p, int N = 64,
                                               BlochFrame frame = BlochFrame::Physical);
// Small-amplitude wave of the 2 pi-periodic frame (f = u^2).
std::unique_ptr<NonlocalBloch> make_stokes_problem(const StokesWave& w, const DispersionSymbol& sym,
                                                   int N = 64);

std::vector<std::complex<double>> eigenvalues(const BlochMatrix& M);
// Eigenvalues sorted by modulus, first `count`.
std::vector<std::complex<double>> nearest_zero(const BlochMatrix& M, int count = 3);

struct SlopeResult {
  std::array<std::complex<double>, 3> slopes;  // lambda / (i xi), physical xi, extrapolated
  std::vector<std::array<std::complex<double>, 3>> raw;  // per xi, matched branches
  double min_gap = 0.0;  // smallest cost gap between best and runner-up matching
};

// Three eigenvalues nearest zero per xi, matched by nearest continuation and
// extrapolated to xi = 0 (Neville). BranchMixing if the matching is ambiguous.
SlopeResult modulation_slopes(const BlochProblem& problem,
                              const std::vector<double>& xi_list = {1e-2, 5e-3, 2.5e-3});

// max |lambda_N - lambda_2N| over the three eigenvalues nearest zero.
double truncation_change(const BlochProblem& problem, double xi);

struct BubbleScan {
  double max_real = 0.0;
  double xi_at_max = 0.0;
};
BubbleScan instability_bubble_scan(const BlochProblem& problem, const std::vector<double>& xi_grid);

}  // namespace modwave
