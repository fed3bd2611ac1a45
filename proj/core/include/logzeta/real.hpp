#pragma once

// Value-semantic wrappers over MPFR. Every Real carries its own precision;
// binary operations produce a result at the larger of the operand precisions.
// There is no ambient precision state.

#include <mpfr.h>

#include <string>
#include <string_view>
#include <utility>

#include "logzeta/errors.hpp"
#include "logzeta/exact.hpp"

namespace logzeta::mp {

using Prec = mpfr_prec_t;

class Real {
 public:
  explicit Real(Prec prec = 64);
  Real(long value, Prec prec);
  Real(double value, Prec prec);
  Real(const exact::Rational& value, Prec prec);
  Real(const exact::BigInt& value, Prec prec);

  /// Parses a decimal string with a single correct rounding. Throws UsageError.
  static Real parse(std::string_view text, Prec prec);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  Prec precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  /// Copy rounded (to nearest) to a new precision.
  Real rounded(Prec prec) const;
  /// Copy rounded towards +infinity; used for error bounds.
  Real rounded_up(Prec prec) const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long exponent2() const;  // floor(log2|x|) + 1, very negative for zero
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  /// Scientific notation with exactly `digits` significant digits, e.g. "-6.25000e-01".
  std::string to_scientific(int digits) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long o);
  Real& operator/=(long o);

  friend Real operator-(const Real& a);
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);
  friend Real operator*(const Real& a, long b);
  friend Real operator/(const Real& a, long b);
  friend Real operator-(long a, const Real& b);
  friend Real operator/(long a, const Real& b);

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real pow(const Real& base, const Real& exponent);
Real pow(const Real& base, long exponent);
Real ldexp(const Real& x, long e);
Real max(const Real& a, const Real& b);
Real pi(Prec prec);
Real log2_const(Prec prec);

/// 2^e as a Real.
Real pow2(long e, Prec prec);

}  // namespace logzeta::mp
