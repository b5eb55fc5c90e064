#include "modwave/picard_fuchs.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace modwave {

PicardFuchsSystem build_system(const PotentialPolynomial& poly, const MomentTable& zeta) {
  PicardFuchsSystem s;
  s.poly = poly.coeffs;
  s.n = poly.degree;
  s.zeta = zeta.zeta;
  const int n = s.n;
  const int dim = 2 * n - 1;
  if (n < 2) throw Error(ErrorCode::DomainError, "Picard-Fuchs system needs degree >= 2");
  if (static_cast<int>(s.zeta.size()) < n - 1)
    throw Error(ErrorCode::DomainError, "not enough zeta moments for the Picard-Fuchs system");
  s.sylvester = Eigen::MatrixXd::Zero(dim, dim);
  s.rhs = Eigen::VectorXd::Zero(dim);
  const Coeffs& a = s.poly;
  for (int m = 0; m <= n - 2; ++m) {
    for (int j = 0; j <= n; ++j) s.sylvester(m, j + m) = a[j];
    s.rhs(m) = s.zeta[m];
  }
  for (int k = 0; k <= n - 1; ++k) {
    const int row = n - 1 + k;
    for (int j = 1; j <= n; ++j) s.sylvester(row, j - 1 + k) = j * a[j];
    s.rhs(row) = k == 0 ? 0.0 : 2.0 * k * s.zeta[k - 1];
  }
  return s;
}

MomentSolution solve_moments(const PicardFuchsSystem& sys, const Tolerances& tol) {
  const Eigen::MatrixXd& A = sys.sylvester;
  // Row and column equilibration; the solution is rescaled afterwards.
  Eigen::VectorXd r = A.cwiseAbs().rowwise().maxCoeff();
  for (Eigen::Index i = 0; i < r.size(); ++i) r(i) = r(i) > 0 ? 1.0 / r(i) : 1.0;
  Eigen::MatrixXd B = r.asDiagonal() * A;
  Eigen::VectorXd col = B.cwiseAbs().colwise().maxCoeff().transpose();
  for (Eigen::Index i = 0; i < col.size(); ++i) col(i) = col(i) > 0 ? 1.0 / col(i) : 1.0;
  B = B * col.asDiagonal();

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(B);
  const auto& sv = svd.singularValues();
  const double smax = sv(0), smin = sv(sv.size() - 1);
  if (!(smin > 1e-14 * smax))
    throw Error(ErrorCode::SingularSystem, "Sylvester matrix is singular: repeated root of P");
  MomentSolution out;
  out.cond = smax / smin;
  if (out.cond > tol.cond_max)
    throw Error(ErrorCode::IllConditioned, fmt::format("Sylvester condition {:.3e}", out.cond));

  const Eigen::VectorXd y = B.partialPivLu().solve(r.asDiagonal() * sys.rhs);
  const Eigen::VectorXd x = col.asDiagonal() * y;
  const double bn = sys.rhs.norm();
  out.residual = (A * x - sys.rhs).norm() / (bn > 0 ? bn : 1.0);
  if (out.residual > 1e-10)
    throw Error(ErrorCode::IllConditioned, fmt::format("Picard-Fuchs residual {:.3e}", out.residual));
  out.I.assign(x.data(), x.data() + x.size());
  return out;
}

std::vector<double> extend_moments(const PicardFuchsSystem& sys, std::vector<double> I, int k_max) {
  const int n = sys.n;
  const Coeffs& a = sys.poly;
  for (int k = static_cast<int>(I.size()); k <= k_max; ++k) {
    const int m = k - n;
    if (m < 0 || m >= static_cast<int>(sys.zeta.size()))
      throw Error(ErrorCode::DomainError, fmt::format("zeta_{} needed to extend I to {}", m, k));
    double s = sys.zeta[m];
    for (int j = 0; j < n; ++j) s -= a[j] * I[j + m];
    I.push_back(s / a[n]);
  }
  return I;
}

ParamJacobian with_determinants(const Matrix3& J, double T, double M, double P) {
  ParamJacobian pj;
  pj.J = J;
  pj.T = T;
  pj.M = M;
  pj.P = P;
  constexpr int a = 0, E = 1, c = 2;
  pj.T_E = J[0][E];
  pj.TM_aE = J[0][a] * J[1][E] - J[0][E] * J[1][a];
  pj.TP_Ec = J[0][E] * J[2][c] - J[0][c] * J[2][E];
  pj.MP_aE = J[1][a] * J[2][E] - J[1][E] * J[2][a];
  pj.TMP_aEc = J[0][0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1]) -
               J[0][1] * (J[1][0] * J[2][2] - J[1][2] * J[2][0]) +
               J[0][2] * (J[1][0] * J[2][1] - J[1][1] * J[2][0]);
  return pj;
}

ParamJacobian param_jacobian(const EquationSpec& spec, const WaveParams& p, int branch,
                             const Tolerances& tol) {
  const WaveCore core = resolve_core(spec, p, branch, tol);
  const PotentialPolynomial& poly = core.poly;
  const int n = poly.degree;
  const int s = core.shift();
  const int e = 1 + s;
  const int top = s + 2 * e + std::max(poly.a_index, poly.c_index);
  const MomentTable mt = zeta_moments(core, std::max(n - 2, top - n));
  const PicardFuchsSystem sys = build_system(poly, mt);
  const MomentSolution sol = solve_moments(sys, tol);
  const std::vector<double> I = extend_moments(sys, sol.I, top);

  Matrix3 J{};
  const int rows[3] = {mt.idx_T, mt.idx_M, mt.idx_P};
  for (int r = 0; r < 3; ++r) {
    const int k = rows[r];
    J[r][0] = -0.5 * mt.weight * I[k + poly.a_index];
    J[r][1] = -0.5 * mt.weight * I[k];
    J[r][2] = -0.5 * poly.c_factor * mt.weight * I[k + poly.c_index];
  }
  ParamJacobian pj = with_determinants(J, mt.T(), mt.M(), mt.P());
  pj.cond = sol.cond;
  return pj;
}

ParamJacobian fd_jacobian(const EquationSpec& spec, const WaveParams& p, int branch, double h_rel,
                          const Tolerances& tol) {
  const double norm = std::abs(p.a) + std::abs(p.E) + std::abs(p.c);
  auto eval = [&](WaveParams q) {
    const TMPH r = quadrature_TMPH(spec, q, branch, tol);
    return std::array<double, 3>{r.T, r.M, r.P};
  };
  Matrix3 J{};
  for (int col = 0; col < 3; ++col) {
    double WaveParams::*field = col == 0 ? &WaveParams::a : col == 1 ? &WaveParams::E : &WaveParams::c;
    const double h = h_rel * std::max(std::abs(p.*field), 0.1 * std::max(norm, 1e-300));
    auto diff = [&](double step) {
      WaveParams plus = p, minus = p;
      plus.*field += step;
      minus.*field -= step;
      const auto fp = eval(plus), fm = eval(minus);
      std::array<double, 3> d{};
      for (int r = 0; r < 3; ++r) d[r] = (fp[r] - fm[r]) / (2 * step);
      return d;
    };
    const auto d1 = diff(h), d2 = diff(0.5 * h), d4 = diff(0.25 * h);
    for (int r = 0; r < 3; ++r) {
      const double r1 = (4.0 * d2[r] - d1[r]) / 3.0, r2 = (4.0 * d4[r] - d2[r]) / 3.0;
      J[r][col] = (16.0 * r2 - r1) / 15.0;
    }
  }
  const TMPH base = quadrature_TMPH(spec, p, branch, tol);
  return with_determinants(J, base.T, base.M, base.P);
}

double jacobian_mismatch(const ParamJacobian& A, const ParamJacobian& B) {
  double scale = 0.0, worst = 0.0;
  for (const auto& row : B.J)
    for (double x : row) scale = std::max(scale, std::abs(x));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double d = std::abs(A.J[i][j] - B.J[i][j]);
      worst = std::max(worst, std::abs(A.J[i][j]) > 1e-12 * scale ? d / std::abs(B.J[i][j]) : d / scale);
    }
  return worst;
}

}  // namespace modwave
