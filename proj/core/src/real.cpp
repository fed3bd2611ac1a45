#include "logzeta/real.hpp"

#include <algorithm>
#include <cstdio>
#include <memory>
#include <string>

namespace logzeta::mp {

namespace {

Prec joint(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

template <typename Fn>
Real unary(const Real& x, Fn fn) {
  Real out(x.precision());
  fn(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

}  // namespace

Real::Real(Prec prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(long value, Prec prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(double value, Prec prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, value, MPFR_RNDN);
}

Real::Real(const exact::Rational& value, Prec prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, value.get().get_mpq_t(), MPFR_RNDN);
}

Real::Real(const exact::BigInt& value, Prec prec) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

Real Real::parse(std::string_view text, Prec prec) {
  std::string s(text);
  // Trim surrounding whitespace; anything else left over is an error.
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw UsageError("empty numeric value");
  s = s.substr(first, last - first + 1);
  Real out(prec);
  char* end = nullptr;
  mpfr_strtofr(out.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0' || !out.is_finite()) {
    throw UsageError("not a finite decimal number: '" + s + "'");
  }
  return out;
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::rounded(Prec prec) const {
  Real out(prec);
  mpfr_set(out.v_, v_, MPFR_RNDN);
  return out;
}

Real Real::rounded_up(Prec prec) const {
  Real out(prec);
  mpfr_set(out.v_, v_, MPFR_RNDU);
  return out;
}

long Real::exponent2() const {
  if (!is_finite() || is_zero()) return mpfr_get_emin();
  return mpfr_get_exp(v_);
}

std::string Real::to_scientific(int digits) const {
  if (digits < 1) digits = 1;
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return sign() > 0 ? "inf" : "-inf";
  const int size = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, v_);
  std::string out(static_cast<std::size_t>(size) + 1, '\0');
  mpfr_snprintf(out.data(), out.size(), "%.*Re", digits - 1, v_);
  out.resize(static_cast<std::size_t>(size));
  return out;
}

Real& Real::operator+=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long o) {
  mpfr_div_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

Real operator-(const Real& a) {
  Real out(a.precision());
  mpfr_neg(out.v_, a.v_, MPFR_RNDN);
  return out;
}

Real operator+(const Real& a, const Real& b) {
  Real out(joint(a, b));
  mpfr_add(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

Real operator-(const Real& a, const Real& b) {
  Real out(joint(a, b));
  mpfr_sub(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

Real operator*(const Real& a, const Real& b) {
  Real out(joint(a, b));
  mpfr_mul(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

Real operator/(const Real& a, const Real& b) {
  Real out(joint(a, b));
  mpfr_div(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

Real operator+(const Real& a, long b) {
  Real out(a.precision());
  mpfr_add_si(out.v_, a.v_, b, MPFR_RNDN);
  return out;
}

Real operator-(const Real& a, long b) {
  Real out(a.precision());
  mpfr_sub_si(out.v_, a.v_, b, MPFR_RNDN);
  return out;
}

Real operator*(const Real& a, long b) {
  Real out(a.precision());
  mpfr_mul_si(out.v_, a.v_, b, MPFR_RNDN);
  return out;
}

Real operator/(const Real& a, long b) {
  Real out(a.precision());
  mpfr_div_si(out.v_, a.v_, b, MPFR_RNDN);
  return out;
}

Real operator-(long a, const Real& b) {
  Real out(b.precision());
  mpfr_si_sub(out.v_, a, b.v_, MPFR_RNDN);
  return out;
}

Real operator/(long a, const Real& b) {
  Real out(b.precision());
  mpfr_si_div(out.v_, a, b.v_, MPFR_RNDN);
  return out;
}

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real expm1(const Real& x) { return unary(x, mpfr_expm1); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log1p(const Real& x) { return unary(x, mpfr_log1p); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }

Real pow(const Real& base, const Real& exponent) {
  Real out(joint(base, exponent));
  mpfr_pow(out.raw(), base.raw(), exponent.raw(), MPFR_RNDN);
  return out;
}

Real pow(const Real& base, long exponent) {
  Real out(base.precision());
  mpfr_pow_si(out.raw(), base.raw(), exponent, MPFR_RNDN);
  return out;
}

Real ldexp(const Real& x, long e) {
  Real out(x.precision());
  mpfr_mul_2si(out.raw(), x.raw(), e, MPFR_RNDN);
  return out;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real pi(Prec prec) {
  Real out(prec);
  mpfr_const_pi(out.raw(), MPFR_RNDN);
  return out;
}

Real log2_const(Prec prec) {
  Real out(prec);
  mpfr_const_log2(out.raw(), MPFR_RNDN);
  return out;
}

Real pow2(long e, Prec prec) {
  Real out(1L, prec);
  mpfr_mul_2si(out.raw(), out.raw(), e, MPFR_RNDN);
  return out;
}

}  // namespace logzeta::mp
