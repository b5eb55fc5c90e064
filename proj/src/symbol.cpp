#include "modwave/symbol.hpp"

#include <cmath>

#include "modwave/errors.hpp"

namespace modwave {

namespace {

constexpr double kSeriesCut = 1e-3;

// sqrt(tanh k / k) = 1 - k^2/6 + 19k^4/360 - 55k^6/3024 + 11813k^8/1814400
constexpr double W2 = -1.0 / 6.0, W4 = 19.0 / 360.0, W6 = -55.0 / 3024.0,
                 W8 = 11813.0 / 1814400.0;
// x coth x = 1 + x^2/3 - x^4/45 + 2x^6/945 - x^8/4725
constexpr double C2 = 1.0 / 3.0, C4 = -1.0 / 45.0, C6 = 2.0 / 945.0, C8 = -1.0 / 4725.0;

double sech2(double k) {
  const double s = 1.0 / std::cosh(k);
  return s * s;
}

}  // namespace

DispersionSymbol DispersionSymbol::whitham() { return {Kind::Whitham, 0.0}; }

DispersionSymbol DispersionSymbol::fkdv(double alpha) {
  if (!(alpha > 0.0)) throw Error(ErrorCode::SymbolDomain, "fKdV exponent must be positive");
  return {Kind::FractionalKdV, alpha};
}

DispersionSymbol DispersionSymbol::ilw(double H) {
  if (!(H > 0.0)) throw Error(ErrorCode::SymbolDomain, "ILW depth must be positive");
  return {Kind::ILW, H};
}

DispersionSymbol DispersionSymbol::bo() { return {Kind::BO, 1.0}; }

DispersionSymbol DispersionSymbol::custom(std::string name, std::function<double(double)> m,
                                          double h) {
  DispersionSymbol s(Kind::Custom, 0.0);
  s.name_ = std::move(name);
  s.fn_ = std::move(m);
  s.h_ = h;
  return s;
}

std::string DispersionSymbol::name() const {
  switch (kind_) {
    case Kind::Whitham: return "whitham";
    case Kind::FractionalKdV: return "fkdv";
    case Kind::ILW: return "ilw";
    case Kind::BO: return "bo";
    case Kind::Custom: return name_;
  }
  return "?";
}

double DispersionSymbol::operator()(double k) const {
  if (kind_ == Kind::Custom) return fn_(k);
  return eval_pos(std::abs(k));
}

double DispersionSymbol::d1(double k) const {
  if (kind_ == Kind::Custom) {
    auto cd = [&](double h) { return (fn_(k + h) - fn_(k - h)) / (2 * h); };
    return (4 * cd(h_ / 2) - cd(h_)) / 3;
  }
  const double v = d1_pos(std::abs(k));
  return k < 0 ? -v : v;
}

double DispersionSymbol::d2(double k) const {
  if (kind_ == Kind::Custom) {
    auto cd = [&](double h) { return (fn_(k + h) - 2 * fn_(k) + fn_(k - h)) / (h * h); };
    return (4 * cd(h_ / 2) - cd(h_)) / 3;
  }
  return d2_pos(std::abs(k));
}

double DispersionSymbol::eval_pos(double k) const {
  switch (kind_) {
    case Kind::Whitham: {
      if (k < kSeriesCut) {
        const double k2 = k * k;
        return 1 + k2 * (W2 + k2 * (W4 + k2 * (W6 + k2 * W8)));
      }
      return std::sqrt(std::tanh(k) / k);
    }
    case Kind::FractionalKdV:
    case Kind::BO: return 1.0 - std::pow(k, param_);
    case Kind::ILW: {
      const double H = param_, x = k * H;
      if (x < kSeriesCut) {
        const double x2 = x * x;
        return 1.0 - x2 * (C2 + x2 * (C4 + x2 * (C6 + x2 * C8))) / H;
      }
      return 1.0 + 1.0 / H - k / std::tanh(x);
    }
    case Kind::Custom: break;
  }
  return fn_(k);
}

double DispersionSymbol::d1_pos(double k) const {
  switch (kind_) {
    case Kind::Whitham: {
      if (k < kSeriesCut) {
        const double k2 = k * k;
        return k * (2 * W2 + k2 * (4 * W4 + k2 * (6 * W6 + k2 * 8 * W8)));
      }
      const double t = std::tanh(k), g = t / k;
      const double gp = (k * sech2(k) - t) / (k * k);
      return gp / (2 * std::sqrt(g));
    }
    case Kind::FractionalKdV:
    case Kind::BO: {
      const double a = param_;
      if (k == 0.0) return a > 1 ? 0.0 : (a == 1 ? -1.0 : -INFINITY);
      return -a * std::pow(k, a - 1);
    }
    case Kind::ILW: {
      const double H = param_, x = k * H;
      if (x < kSeriesCut) {
        const double x2 = x * x;
        // d/dk of -(1/H)(C2 x^2 + C4 x^4 + ...) with x = kH
        return -x * (2 * C2 + x2 * (4 * C4 + x2 * (6 * C6 + x2 * 8 * C8)));
      }
      const double s = 1.0 / std::sinh(x);
      return -(1.0 / std::tanh(x) - x * s * s);
    }
    case Kind::Custom: break;
  }
  return 0.0;
}

double DispersionSymbol::d2_pos(double k) const {
  switch (kind_) {
    case Kind::Whitham: {
      if (k < kSeriesCut) {
        const double k2 = k * k;
        return 2 * W2 + k2 * (12 * W4 + k2 * (30 * W6 + k2 * 56 * W8));
      }
      const double t = std::tanh(k), s = sech2(k), g = t / k;
      const double gp = (k * s - t) / (k * k);
      const double gpp = (-2 * k * k * s * t - 2 * k * s + 2 * t) / (k * k * k);
      const double rg = std::sqrt(g);
      return gpp / (2 * rg) - gp * gp / (4 * g * rg);
    }
    case Kind::FractionalKdV:
    case Kind::BO: {
      const double a = param_;
      if (a == 1.0) return 0.0;
      if (k == 0.0) return a > 2 ? 0.0 : (a == 2 ? -2.0 : -INFINITY);
      return -a * (a - 1) * std::pow(k, a - 2);
    }
    case Kind::ILW: {
      const double H = param_, x = k * H;
      if (x < kSeriesCut) {
        const double x2 = x * x;
        return -H * (2 * C2 + x2 * (12 * C4 + x2 * (30 * C6 + x2 * 56 * C8)));
      }
      const double s = 1.0 / std::sinh(x);
      const double c = 1.0 / std::tanh(x);
      return -(-2 * H * s * s + 2 * x * H * s * s * c);
    }
    case Kind::Custom: break;
  }
  return 0.0;
}

}  // namespace modwave
