#include "logzeta/complex.hpp"

namespace logzeta::mp {

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  *this = *this * o;
  return *this;
}

Complex& Complex::operator*=(const Real& o) {
  re *= o;
  im *= o;
  return *this;
}

Complex& Complex::operator/=(const Real& o) {
  re /= o;
  im /= o;
  return *this;
}

Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }

Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex operator/(const Complex& a, const Complex& b) {
  // Smith's algorithm keeps intermediate magnitudes bounded.
  if (abs(b.re) >= abs(b.im)) {
    const Real ratio = b.im / b.re;
    const Real den = b.re + b.im * ratio;
    return {(a.re + a.im * ratio) / den, (a.im - a.re * ratio) / den};
  }
  const Real ratio = b.re / b.im;
  const Real den = b.re * ratio + b.im;
  return {(a.re * ratio + a.im) / den, (a.im * ratio - a.re) / den};
}

Complex operator+(const Complex& a, const Real& b) { return {a.re + b, a.im}; }
Complex operator-(const Complex& a, const Real& b) { return {a.re - b, a.im}; }
Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
Complex operator*(const Real& a, const Complex& b) { return {a * b.re, a * b.im}; }
Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
Complex operator+(const Complex& a, long b) { return {a.re + b, a.im}; }
Complex operator-(const Complex& a, long b) { return {a.re - b, a.im}; }
Complex operator*(const Complex& a, long b) { return {a.re * b, a.im * b}; }
Complex operator/(const Complex& a, long b) { return {a.re / b, a.im / b}; }

Real abs(const Complex& z) {
  Real out(z.precision());
  mpfr_hypot(out.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
  return out;
}

Real arg(const Complex& z) {
  Real out(z.precision());
  mpfr_atan2(out.raw(), z.im.raw(), z.re.raw(), MPFR_RNDN);
  return out;
}

Complex exp(const Complex& z) {
  const Real scale = exp(z.re);
  if (z.im.is_zero()) return Complex(scale);
  Real s(z.precision());
  Real c(z.precision());
  mpfr_sin_cos(s.raw(), c.raw(), z.im.raw(), MPFR_RNDN);
  return {scale * c, scale * s};
}

Complex log(const Complex& z) {
  if (z.im.is_zero() && z.re.sign() > 0) return Complex(log(z.re));
  return {log(abs(z)), arg(z)};
}

Complex expm1(const Complex& z) {
  if (z.im.is_zero()) return Complex(expm1(z.re));
  Real s(z.precision());
  Real c(z.precision());
  mpfr_sin_cos(s.raw(), c.raw(), z.im.raw(), MPFR_RNDN);
  // cos y − 1 = −2 sin²(y/2)
  const Real half_sin = sin(ldexp(z.im, -1));
  const Real cos_m1 = ldexp(half_sin * half_sin, 1);
  const Real em = expm1(z.re);
  return {em * c - cos_m1, (em + 1L) * s};
}

Complex expm1_over(const Complex& z) {
  const Prec prec = z.precision();
  const Real magnitude = abs(z);
  if (magnitude.is_zero()) return Complex(1L, prec);
  if (magnitude > Real(0.5, 53)) return expm1(z) / z;
  // Σ_{j≥0} z^j/(j+1)!; |z| ≤ 1/2 so the terms shrink at least by half each step.
  Complex sum(1L, prec);
  Complex term(1L, prec);
  const Real eps = pow2(-static_cast<long>(prec) - 2, 53);
  for (long j = 1; j < 4 * prec; ++j) {
    term = term * z / (j + 1);
    sum += term;
    if (abs(term) < eps) break;
  }
  return sum;
}

Complex sin(const Complex& z) {
  Real s(z.precision());
  Real c(z.precision());
  mpfr_sin_cos(s.raw(), c.raw(), z.re.raw(), MPFR_RNDN);
  return {s * cosh(z.im), c * sinh(z.im)};
}

Complex pow(const Real& base, const Complex& z) {
  if (base.sign() <= 0) throw DomainError("pow: base must be positive");
  return exp(z * log(base));
}

Complex reciprocal(const Complex& z) { return Complex(1L, z.precision()) / z; }

}  // namespace logzeta::mp
