#include "logzeta/exact.hpp"

#include <utility>

namespace logzeta::exact {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("rational division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::to_string() const { return q_.get_str(); }

BigInt factorial(unsigned n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

BigInt lcm_upto(unsigned n) {
  if (n == 0) throw DomainError("lcm_upto: n must be at least 1");
  BigInt d = 1;
  for (unsigned k = 2; k <= n; ++k) d = lcm(d, BigInt(k));
  return d;
}

Canonical canonicalize(const MonomialSpec& spec) {
  if (spec.r >= spec.s) return {spec, false};
  return {MonomialSpec{spec.s, spec.r, spec.n}, true};
}

std::string ZetaLinearForm::to_string() const {
  if (is_rational()) return constant.to_string();
  std::string out;
  const std::string z = "zeta(" + std::to_string(zeta_arg) + ")";
  if (zeta_coeff == Rational(1)) {
    out = z;
  } else if (zeta_coeff == Rational(-1)) {
    out = "-" + z;
  } else {
    out = zeta_coeff.to_string() + "*" + z;
  }
  if (constant.sign() > 0) out += " + " + constant.to_string();
  if (constant.sign() < 0) out += " - " + (-constant).to_string();
  return out;
}

namespace {

void require_same_arg(const ZetaLinearForm& a, const ZetaLinearForm& b) {
  if (a.zeta_arg != b.zeta_arg && !a.is_rational() && !b.is_rational()) {
    throw DomainError("cannot combine zeta forms with different arguments");
  }
}

unsigned common_arg(const ZetaLinearForm& a, const ZetaLinearForm& b) {
  return a.is_rational() ? b.zeta_arg : a.zeta_arg;
}

// Σ_{k=lo}^{hi} 1/k^p, zero when lo > hi.
Rational power_sum(unsigned lo, unsigned hi, unsigned p) {
  Rational sum;
  for (unsigned k = lo; k <= hi; ++k) {
    BigInt kp;
    mpz_ui_pow_ui(kp.get_mpz_t(), k, p);
    sum += Rational(BigInt(1), kp);
  }
  return sum;
}

Rational signed_factorial(unsigned f, unsigned n) {
  Rational v(factorial(f));
  return n % 2 == 0 ? v : -v;
}

}  // namespace

ZetaLinearForm operator+(const ZetaLinearForm& a, const ZetaLinearForm& b) {
  require_same_arg(a, b);
  return {a.constant + b.constant, a.zeta_coeff + b.zeta_coeff, common_arg(a, b)};
}

ZetaLinearForm operator-(const ZetaLinearForm& a, const ZetaLinearForm& b) {
  require_same_arg(a, b);
  return {a.constant - b.constant, a.zeta_coeff - b.zeta_coeff, common_arg(a, b)};
}

ZetaLinearForm operator*(const Rational& c, const ZetaLinearForm& f) {
  return {c * f.constant, c * f.zeta_coeff, f.zeta_arg};
}

Theorem1aValue theorem1a_value(const MonomialSpec& spec) {
  if (spec.r == spec.s) {
    throw DomainError("theorem1a_value requires r != s; use theorem1b_form");
  }
  const auto [c, swapped] = canonicalize(spec);
  Rational v = signed_factorial(c.n, c.n) / Rational(static_cast<long>(c.r - c.s));
  v *= power_sum(c.s + 1, c.r, c.n + 1);
  return {v, c, swapped};
}

DivisibilityWitness divisibility_check(const MonomialSpec& spec) {
  const auto value = theorem1a_value(spec);
  DivisibilityWitness w;
  w.denominator = value.value.denominator();
  mpz_pow_ui(w.bound.get_mpz_t(), lcm_upto(value.canonical.r).get_mpz_t(), value.canonical.n + 2);
  w.holds = mpz_divisible_p(w.bound.get_mpz_t(), w.denominator.get_mpz_t()) != 0;
  return w;
}

ZetaLinearForm theorem1b_form(unsigned r, unsigned n) {
  const Rational lead = signed_factorial(n + 1, n);
  return {-(lead * power_sum(1, r, n + 2)), lead, n + 2};
}

ZetaLinearForm corollary_form(unsigned n) {
  // (1 − x) x^0 y^0 = x^0 y^0 − x^1 y^0, and [−ln]^n = (−1)^n ln^n.
  const ZetaLinearForm diagonal = theorem1b_form(0, n);
  const ZetaLinearForm offdiag{theorem1a_value({1, 0, n}).value, Rational(), n + 2};
  const Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
  return sign * (diagonal - offdiag);
}

}  // namespace logzeta::exact
