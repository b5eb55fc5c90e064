#pragma once

#include <functional>
#include <string>

namespace modwave {

// Even, real Fourier multiplier m(k) of a dispersive operator, normalized so
// that m(0) = 1 for the named families.
class DispersionSymbol {
 public:
  enum class Kind { Whitham, FractionalKdV, ILW, BO, Custom };

  static DispersionSymbol whitham();
  // m(k) = 1 - |k|^alpha
  static DispersionSymbol fkdv(double alpha);
  // m(k) = 1 + 1/H - k coth(kH)
  static DispersionSymbol ilw(double H);
  // fKdV with alpha = 1: m(k) = 1 - |k|
  static DispersionSymbol bo();
  // Derivatives by Richardson-extrapolated central differences with step h.
  static DispersionSymbol custom(std::string name, std::function<double(double)> m,
                                 double h = 1e-5);

  double operator()(double k) const;
  double d1(double k) const;
  double d2(double k) const;

  Kind kind() const { return kind_; }
  double param() const { return param_; }
  std::string name() const;

 private:
  DispersionSymbol(Kind kind, double param) : kind_(kind), param_(param) {}
  double eval_pos(double k) const;
  double d1_pos(double k) const;
  double d2_pos(double k) const;

  Kind kind_;
  double param_;
  double h_ = 1e-5;
  std::string name_;
  std::function<double(double)> fn_;
};

}  // namespace modwave
