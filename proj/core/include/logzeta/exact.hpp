#pragma once

// Exact integer/rational arithmetic and the closed forms of the monomial-weight
// integrals
//
//     I(r, s, n) = ∫∫_(0,1)² ln^n(xy) / (1 − xy) · x^r y^s dx dy
//
// No rounding happens anywhere in this header's implementation.

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "logzeta/errors.hpp"

namespace logzeta::exact {

using BigInt = mpz_class;

/// Rational number kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value) : q_(value) {}
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  const mpq_class& get() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// "p/q", or "p" when the denominator is one.
  std::string to_string() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

 private:
  mpq_class q_{0};
};

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// d_n = lcm(1, 2, ..., n). Throws DomainError for n = 0.
BigInt lcm_upto(unsigned n);

/// Exponents of the monomial weight x^r y^s and the power n of ln(xy).
struct MonomialSpec {
  unsigned r = 0;
  unsigned s = 0;
  unsigned n = 0;

  friend bool operator==(const MonomialSpec&, const MonomialSpec&) = default;
  friend auto operator<=>(const MonomialSpec&, const MonomialSpec&) = default;
};

/// Swaps r and s so that r >= s. The integral is symmetric under the swap.
struct Canonical {
  MonomialSpec spec;
  bool swapped = false;
};
Canonical canonicalize(const MonomialSpec& spec);

/// a + b·ζ(m) with exact rational a, b.
struct ZetaLinearForm {
  Rational constant;
  Rational zeta_coeff;
  unsigned zeta_arg = 2;

  bool is_rational() const { return zeta_coeff.is_zero(); }
  std::string to_string() const;

  friend bool operator==(const ZetaLinearForm&, const ZetaLinearForm&) = default;
};

/// Forms with different zeta arguments cannot be combined; throws DomainError.
ZetaLinearForm operator+(const ZetaLinearForm& a, const ZetaLinearForm& b);
ZetaLinearForm operator-(const ZetaLinearForm& a, const ZetaLinearForm& b);
ZetaLinearForm operator*(const Rational& c, const ZetaLinearForm& f);

struct Theorem1aValue {
  Rational value;
  MonomialSpec canonical;  // r > s
  bool swapped = false;
};

/// I(r, s, n) for r ≠ s:  n!(−1)^n/(r−s) · Σ_{k=s+1}^{r} 1/k^{n+1}  (after r ↔ s canonicalization).
/// Throws DomainError when r = s.
Theorem1aValue theorem1a_value(const MonomialSpec& spec);

struct DivisibilityWitness {
  bool holds = false;
  BigInt denominator;
  BigInt bound;  // d_r^{n+2}
};

/// Checks that the reduced denominator of I(r, s, n) divides d_r^{n+2}.
DivisibilityWitness divisibility_check(const MonomialSpec& spec);

/// I(r, r, n) = (n+1)!(−1)^n (ζ(n+2) − Σ_{k=1}^{r} 1/k^{n+2}); empty sum is zero.
ZetaLinearForm theorem1b_form(unsigned r, unsigned n);

/// ∫∫ [−ln(xy)]^n (1−x)/(1−xy) = (−1)^n [I(0,0,n) − I(1,0,n)] = (n+1)!ζ(n+2) − n!.
ZetaLinearForm corollary_form(unsigned n);

}  // namespace logzeta::exact
