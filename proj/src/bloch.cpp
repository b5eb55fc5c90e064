#include "modwave/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <future>
#include <limits>
#include <numbers>
#include <unsupported/Eigen/FFT>

namespace modwave {

namespace {

constexpr double kPi = std::numbers::pi;
using cd = std::complex<double>;
constexpr cd I1{0.0, 1.0};
constexpr double kTailMax = 1e-12;

void check_modes(int N) {
  if (N < 8) throw Error(ErrorCode::ResolutionError, "Bloch truncation needs N >= 8");
}

void check_tail(double tail) {
  if (tail > kTailMax)
    throw Error(ErrorCode::ResolutionError,
                fmt::format("coefficient tail energy {:.3e} exceeds {:.0e}; increase N", tail, kTailMax));
}

bool less_complex(cd x, cd y) { return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag(); }

}  // namespace

std::vector<cd> fourier_coefficients(const std::vector<double>& samples, int N, double* tail) {
  const int M = static_cast<int>(samples.size());
  if (M < 4 * N + 1) throw Error(ErrorCode::ResolutionError, "too few samples for the Toeplitz block");
  Eigen::FFT<double> fft;
  std::vector<cd> X;
  fft.fwd(X, samples);
  std::vector<cd> g(4 * N + 1);
  for (int j = -2 * N; j <= 2 * N; ++j) g[j + 2 * N] = X[((j % M) + M) % M] / static_cast<double>(M);
  if (tail) {
    double total = 0.0, out = 0.0;
    for (int j = 0; j < M; ++j) {
      const int mode = j <= M / 2 ? j : j - M;
      const double e = std::norm(X[j]);
      total += e;
      if (std::abs(mode) > N) out += e;
    }
    *tail = total > 0 ? out / total : 0.0;
  }
  return g;
}

LocalBloch::LocalBloch(const WaveProfile& profile, int N, BlochFrame frame)
    : profile_(std::make_shared<const WaveProfile>(profile)), N_(N), frame_(frame) {
  prepare();
}

void LocalBloch::prepare() {
  check_modes(N_);
  T_ = profile_->period();
  c_ = profile_->params().c;
  u_ = profile_->sample(8 * N_);
  std::vector<double> fp(u_.size());
  for (std::size_t j = 0; j < u_.size(); ++j) fp[j] = nonlinearity_prime(profile_->spec(), u_[j]);
  g_ = fourier_coefficients(fp, N_, &tail_);
}

std::unique_ptr<BlochProblem> LocalBloch::with_modes(int N) const {
  std::unique_ptr<LocalBloch> p(new LocalBloch());
  p->profile_ = profile_;
  p->N_ = N;
  p->frame_ = frame_;
  p->prepare();
  return p;
}

double LocalBloch::slope_scale() const { return frame_ == BlochFrame::Normalized ? 2 * kPi / T_ : 1.0; }

BlochMatrix LocalBloch::assemble(double xi) const {
  check_tail(tail_);
  const int n = 2 * N_ + 1;
  BlochMatrix B;
  B.N = N_;
  B.xi = xi;
  B.tail = tail_;
  B.L.resize(n, n);
  const double k = 2 * kPi / T_;
  for (int r = 0; r < n; ++r) {
    const int nr = r - N_;
    const double q = frame_ == BlochFrame::Physical ? k * nr + xi : k * (nr + xi);
    for (int s = 0; s < n; ++s) B.L(r, s) = I1 * q * g_[(nr - (s - N_)) + 2 * N_];
    B.L(r, r) += I1 * q * (-q * q + c_);
  }
  return B;
}

int recommended_modes(const WaveProfile& profile) {
  const std::vector<double> u = profile.sample(8 * 64);
  std::vector<double> fp(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) fp[j] = nonlinearity_prime(profile.spec(), u[j]);
  double tail = 0.0;
  fourier_coefficients(fp, 64, &tail);
  return tail > kTailMax ? 256 : 64;
}

std::vector<cd> local_constant_spectrum(const EquationSpec& spec, double u0, double c, double T,
                                        double xi, int N) {
  std::vector<cd> ev;
  const double fp = nonlinearity_prime(spec, u0);
  for (int n = -N; n <= N; ++n) {
    const double q = 2 * kPi * n / T + xi;
    ev.push_back(I1 * q * (-q * q + c + fp));
  }
  std::sort(ev.begin(), ev.end(), less_complex);
  return ev;
}

NonlocalBloch::NonlocalBloch(DispersionSymbol sym, std::vector<double> samples, double T, double c,
                             Coeffs f, int N, BlochFrame frame)
    : sym_(std::move(sym)), u_(std::move(samples)), T_(T), c_(c), f_(std::move(f)), N_(N), frame_(frame) {
  prepare();
}

void NonlocalBloch::prepare() {
  check_modes(N_);
  const Coeffs fp = pderiv(f_);
  std::vector<double> g(u_.size());
  for (std::size_t j = 0; j < u_.size(); ++j) g[j] = peval(fp, u_[j]);
  g_ = fourier_coefficients(g, N_, &tail_);
}

std::unique_ptr<BlochProblem> NonlocalBloch::with_modes(int N) const {
  if (static_cast<int>(u_.size()) < 4 * N + 1)
    throw Error(ErrorCode::ResolutionError, "sample grid too coarse for the requested N");
  return std::make_unique<NonlocalBloch>(sym_, u_, T_, c_, f_, N, frame_);
}

BlochMatrix NonlocalBloch::assemble(double xi) const {
  check_tail(tail_);
  const int n = 2 * N_ + 1;
  BlochMatrix B;
  B.N = N_;
  B.xi = xi;
  B.tail = tail_;
  B.L.resize(n, n);
  const double k = 2 * kPi / T_;
  for (int r = 0; r < n; ++r) {
    const int nr = r - N_;
    double d, kappa;
    if (frame_ == BlochFrame::Physical) {
      d = k * nr + xi;
      kappa = d;
    } else {
      d = nr + xi;
      kappa = k * d;
    }
    for (int s = 0; s < n; ++s) B.L(r, s) = -I1 * d * g_[(nr - (s - N_)) + 2 * N_];
    B.L(r, r) += I1 * d * (-sym_(kappa) + c_);
  }
  return B;
}

std::unique_ptr<NonlocalBloch> make_bo_problem(const BOParams& p, int N, BlochFrame frame) {
  bo_check(p);
  return std::make_unique<NonlocalBloch>(DispersionSymbol::bo(), bo_sample(p, 16 * N), 2 * kPi / p.k,
                                         1.0 - p.c, Coeffs{0.0, 0.0, 1.0}, N, frame);
}

std::unique_ptr<NonlocalBloch> make_stokes_problem(const StokesWave& w, const DispersionSymbol& sym,
                                                   int N) {
  return std::make_unique<NonlocalBloch>(sym, w.sample(16 * N), 2 * kPi / w.k, w.c,
                                         Coeffs{0.0, 0.0, 1.0}, N, BlochFrame::Normalized);
}

std::vector<cd> eigenvalues(const BlochMatrix& M) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M.L, false);
  if (es.info() != Eigen::Success) throw Error(ErrorCode::ResolutionError, "eigensolver failed");
  std::vector<cd> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(ev.begin(), ev.end(), less_complex);
  return ev;
}

std::vector<cd> nearest_zero(const BlochMatrix& M, int count) {
  std::vector<cd> ev = eigenvalues(M);
  std::stable_sort(ev.begin(), ev.end(), [](cd x, cd y) { return std::abs(x) < std::abs(y); });
  ev.resize(std::min<std::size_t>(count, ev.size()));
  return ev;
}

namespace {

using Triple = std::array<cd, 3>;

constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

// Best permutation of `next` onto `prev`; returns the cost gap to the runner-up.
double match(const Triple& prev, Triple& next) {
  double best = std::numeric_limits<double>::infinity(), second = best;
  int arg = 0;
  for (int p = 0; p < 6; ++p) {
    double cost = 0.0;
    for (int j = 0; j < 3; ++j) cost += std::abs(next[kPerms[p][j]] - prev[j]);
    if (cost < best) {
      second = best;
      best = cost;
      arg = p;
    } else if (cost < second) {
      second = cost;
    }
  }
  const Triple copy = next;
  for (int j = 0; j < 3; ++j) next[j] = copy[kPerms[arg][j]];
  return second - best;
}

cd neville(const std::vector<double>& x, std::vector<cd> y) {
  const std::size_t n = x.size();
  for (std::size_t m = 1; m < n; ++m)
    for (std::size_t i = 0; i + m < n; ++i)
      y[i] = ((0.0 - x[i + m]) * y[i] + (x[i] - 0.0) * y[i + 1]) / (x[i] - x[i + m]);
  return y[0];
}

}  // namespace

SlopeResult modulation_slopes(const BlochProblem& problem, const std::vector<double>& xi_list) {
  if (xi_list.size() < 2) throw Error(ErrorCode::ConfigError, "need at least two Bloch frequencies");
  std::vector<std::future<Triple>> jobs;
  for (double xi : xi_list) {
    if (xi == 0.0) throw Error(ErrorCode::ConfigError, "Bloch frequency must be nonzero");
    jobs.push_back(std::async(std::launch::async, [&problem, xi] {
      const auto ev = nearest_zero(problem.assemble(xi), 3);
      Triple s;
      for (int j = 0; j < 3; ++j) s[j] = ev[j] / (I1 * xi) / problem.slope_scale();
      return s;
    }));
  }
  SlopeResult r;
  for (auto& j : jobs) r.raw.push_back(j.get());
  std::sort(r.raw[0].begin(), r.raw[0].end(), less_complex);
  r.min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < r.raw.size(); ++i) {
    const double gap = match(r.raw[i - 1], r.raw[i]);
    r.min_gap = std::min(r.min_gap, gap);
    if (gap < 1e-10)
      throw Error(ErrorCode::BranchMixing,
                  fmt::format("ambiguous branch continuation at xi = {} (gap {:.3e})", xi_list[i], gap));
  }
  for (int b = 0; b < 3; ++b) {
    std::vector<cd> y;
    for (const auto& t : r.raw) y.push_back(t[b]);
    r.slopes[b] = neville(xi_list, y);
  }
  return r;
}

double truncation_change(const BlochProblem& problem, double xi) {
  const auto a = nearest_zero(problem.assemble(xi), 3);
  const auto fine = problem.with_modes(2 * problem.modes());
  const auto b = nearest_zero(fine->assemble(xi), 3);
  Triple ta{a[0], a[1], a[2]}, tb{b[0], b[1], b[2]};
  match(ta, tb);
  double d = 0.0;
  for (int j = 0; j < 3; ++j) d = std::max(d, std::abs(ta[j] - tb[j]));
  return d;
}

BubbleScan instability_bubble_scan(const BlochProblem& problem, const std::vector<double>& xi_grid) {
  std::vector<std::future<double>> jobs;
  for (double xi : xi_grid)
    jobs.push_back(std::async(std::launch::async, [&problem, xi] {
      double m = -std::numeric_limits<double>::infinity();
      for (cd z : eigenvalues(problem.assemble(xi))) m = std::max(m, z.real());
      return m;
    }));
  BubbleScan r{-std::numeric_limits<double>::infinity(), 0.0};
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const double m = jobs[i].get();
    if (m > r.max_real) {
      r.max_real = m;
      r.xi_at_max = xi_grid[i];
    }
  }
  return r;
}

}  // namespace modwave
