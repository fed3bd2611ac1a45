#pragma once

#include "logzeta/real.hpp"

namespace logzeta::mp {

/// Complex number with arbitrary-precision real and imaginary parts.
struct Complex {
  Real re;
  Real im;

  explicit Complex(Prec prec = 64) : re(prec), im(prec) {}
  explicit Complex(Real real) : re(std::move(real)), im(re.precision()) {}
  Complex(Real real, Real imag) : re(std::move(real)), im(std::move(imag)) {}
  Complex(long real, Prec prec) : re(real, prec), im(prec) {}

  Prec precision() const { return std::max(re.precision(), im.precision()); }
  Complex rounded(Prec prec) const { return {re.rounded(prec), im.rounded(prec)}; }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }
  bool is_real() const { return im.is_zero(); }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator*=(const Real& o);
  Complex& operator/=(const Real& o);
};

Complex operator-(const Complex& a);
Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator+(const Complex& a, const Real& b);
Complex operator-(const Complex& a, const Real& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator/(const Complex& a, const Real& b);
Complex operator+(const Complex& a, long b);
Complex operator-(const Complex& a, long b);
Complex operator*(const Complex& a, long b);
Complex operator/(const Complex& a, long b);

Real abs(const Complex& z);
Real arg(const Complex& z);
Complex exp(const Complex& z);
/// Principal branch.
Complex log(const Complex& z);
/// e^z − 1 without cancellation for small |z|.
Complex expm1(const Complex& z);
/// (e^z − 1)/z, continuous through z = 0 where it equals 1.
Complex expm1_over(const Complex& z);
Complex sin(const Complex& z);
/// base^z = exp(z · ln base) for a positive real base.
Complex pow(const Real& base, const Complex& z);
Complex reciprocal(const Complex& z);

}  // namespace logzeta::mp
