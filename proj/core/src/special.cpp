#include "logzeta/special.hpp"

#include <cmath>
#include <mutex>
#include <string>
#include <vector>

namespace logzeta::special {

using exact::BigInt;
using exact::Rational;

namespace {

constexpr mp::Prec kBoundPrec = 64;

// Grow-only table of B_0..B_m from Σ_{j=0}^{m} C(m+1, j) B_j = 0, plus
// B_{2j}/(2j)!. Entries never change once written.
class BernoulliTable {
 public:
  static BernoulliTable& instance() {
    static BernoulliTable table;
    return table;
  }

  mpq_class get(unsigned k) {
    std::lock_guard lock(mutex_);
    extend(k);
    return values_[k];
  }

  mpq_class scaled(unsigned j) {
    std::lock_guard lock(mutex_);
    extend(2 * j);
    while (scaled_.size() <= j) {
      const unsigned i = static_cast<unsigned>(scaled_.size());
      mpq_class q = values_[2 * i];
      q /= mpq_class(exact::factorial(2 * i));
      scaled_.push_back(q);
    }
    return scaled_[j];
  }

 private:
  BernoulliTable() { values_.emplace_back(1); }

  void extend(unsigned k) {
    while (values_.size() <= k) {
      const unsigned m = static_cast<unsigned>(values_.size());
      if (m > 1 && m % 2 == 1) {
        values_.emplace_back(0);
        continue;
      }
      mpq_class sum = 0;
      for (unsigned j = 0; j < m; ++j) {
        if (values_[j] == 0) continue;
        sum += mpq_class(exact::binomial(m + 1, j)) * values_[j];
      }
      mpq_class b = -sum / (m + 1);
      b.canonicalize();
      values_.push_back(b);
    }
  }

  std::mutex mutex_;
  std::vector<mpq_class> values_;
  std::vector<mpq_class> scaled_;
};

Real low(const Real& x) { return x.rounded_up(kBoundPrec); }

void require_positive_real_part(const Complex& s, const char* what) {
  if (s.re.sign() <= 0) {
    throw DomainError(std::string(what) + ": requires Re(s) > 0");
  }
}

bool is_nonpositive_integer(const Complex& z) {
  if (!z.im.is_zero() || z.re.sign() > 0) return false;
  return mpfr_integer_p(z.re.raw()) != 0;
}

// Σ_{k=1}^{count} k^{-s}
Complex power_head(const Complex& s, unsigned count) {
  const mp::Prec prec = s.precision();
  Complex sum(prec);
  for (unsigned k = 1; k <= count; ++k) {
    sum += mp::pow(Real(static_cast<long>(k), prec), -s);
  }
  return sum;
}

// ζ(s) or ζ(s) − 1/(s−1) at the precision of s.
Complex zeta_em(const Complex& s, IntegralTerm mode) {
  const mp::Prec prec = s.precision();
  const Real target = mp::pow2(-static_cast<long>(prec), kBoundPrec);
  const double t = std::fabs(s.im.to_double());
  auto n = static_cast<unsigned>(std::ceil(0.12 * static_cast<double>(prec) + t)) + 4;
  for (int attempt = 0; attempt < 12; ++attempt, n *= 2) {
    TailSum tail = hurwitz_tail(s, Real(static_cast<long>(n), prec), target, mode);
    if (tail.bound < target) return power_head(s, n - 1) + tail.value;
  }
  throw ConvergenceError("zeta: Euler-Maclaurin cutoff did not converge");
}

// log Γ(w) by the Stirling series, ℜ(w) large.
Complex log_gamma_stirling(const Complex& w, const Real& target) {
  const mp::Prec prec = w.precision();
  const Real two_pi = mp::ldexp(mp::pi(prec), 1);
  Complex value = (w - Real(0.5, prec)) * mp::log(w) - w;
  value.re += mp::log(two_pi) / 2L;

  // Remainder after M terms ≤ |B_{2M+2}| / ((2M+2)(2M+1)|w|^{2M+1}) · sec^{2M+2}(arg(w)/2).
  const Real mod = low(mp::abs(w));
  const Real half_cos = mp::sqrt((Real(1L, kBoundPrec) + low(w.re) / mod) / 2L);
  const Complex inv_w = mp::reciprocal(w);
  const Complex inv_w2 = inv_w * inv_w;
  Complex power = inv_w;  // w^{-(2j-1)}
  for (unsigned j = 1; j < 4 * prec; ++j) {
    const Real b(Rational(BernoulliTable::instance().get(2 * j)), prec);
    value += power * (b / static_cast<long>((2 * j) * (2 * j - 1)));
    power *= inv_w2;
    const Real next_b = low(mp::abs(Real(Rational(BernoulliTable::instance().get(2 * j + 2)), kBoundPrec)));
    const Real bound = next_b / static_cast<long>((2 * j + 2) * (2 * j + 1)) /
                       mp::pow(mod, static_cast<long>(2 * j + 1)) /
                       mp::pow(half_cos, static_cast<long>(2 * j + 2));
    if (bound < target) return value;
  }
  throw ConvergenceError("gamma: Stirling series did not converge");
}

}  // namespace

Rational bernoulli(unsigned k) {
  if (k > 1 && k % 2 == 1) {
    throw DomainError("bernoulli: odd index " + std::to_string(k) + " > 1 is zero; not requested");
  }
  return Rational(BernoulliTable::instance().get(k));
}

Real bernoulli_scaled(unsigned j, mp::Prec prec) {
  Real out(prec);
  const mpq_class q = BernoulliTable::instance().scaled(j);
  mpfr_set_q(out.raw(), q.get_mpq_t(), MPFR_RNDN);
  return out;
}

TailSum hurwitz_tail(const Complex& s, const Real& a, const Real& target, IntegralTerm mode) {
  const mp::Prec prec = std::max(s.precision(), a.precision());
  const Complex sp = s.rounded(prec);
  const Real log_a = mp::log(a.rounded(prec));
  const Complex a_pow = mp::exp(-sp * log_a);  // A^{-s}

  Complex value(prec);
  switch (mode) {
    case IntegralTerm::include:
      value = a_pow * a / (sp - 1L);
      break;
    case IntegralTerm::pole_subtracted: {
      Complex one_minus_s = -(sp - 1L);
      value = -(mp::expm1_over(one_minus_s * log_a) * log_a);
      break;
    }
    case IntegralTerm::omit:
      break;
  }
  value += a_pow / 2L;

  const Real inv_a = 1L / a.rounded(prec);
  const Real inv_a2 = inv_a * inv_a;
  const Real sigma = low(sp.re);
  const Real two_pi = low(mp::ldexp(mp::pi(kBoundPrec), 1));
  const Real log_a_low = low(log_a);

  Complex poch = sp;     // (s)_{2j-1}
  Real inv_pow = inv_a;  // A^{-(2j-1)}
  Real previous_bound(kBoundPrec);
  TailSum out{value, Real(kBoundPrec), 0};
  for (unsigned j = 1; j < 2000; ++j) {
    out.value += poch * a_pow * (bernoulli_scaled(j, prec) * inv_pow);
    out.terms = j;

    const Complex poch_even = poch * (sp + static_cast<long>(2 * j - 1));  // (s)_{2j}
    const Real exponent = sigma + static_cast<long>(2 * j - 1);
    Real bound = low(mp::abs(poch_even)) * 4L / mp::pow(two_pi, static_cast<long>(2 * j)) / exponent /
                 mp::exp(exponent * log_a_low);
    bound = bound.rounded_up(kBoundPrec);
    out.bound = bound;
    if (bound < target) return out;
    if (j > 2 && bound > previous_bound) return out;
    previous_bound = bound;

    poch = poch_even * (sp + static_cast<long>(2 * j));
    inv_pow *= inv_a2;
  }
  return out;
}

Complex gamma(const Complex& z, const PrecisionContext& ctx) {
  if (is_nonpositive_integer(z)) throw PoleError("gamma: pole at a non-positive integer");
  const mp::Prec prec = ctx.internal();
  const Complex zi = z.rounded(prec);

  if (zi.re < Real(0.5, 53)) {
    // Γ(z) Γ(1−z) = π / sin(πz)
    const Real pi = mp::pi(prec);
    const Complex reflected = gamma(Complex(1L, prec) - zi, PrecisionContext(ctx.internal(), 0));
    return (Complex(pi) / (mp::sin(zi * pi) * reflected)).rounded(ctx.working());
  }

  const double threshold = 0.12 * static_cast<double>(prec) + 8.0;
  long shift = 0;
  if (zi.re.to_double() < threshold) {
    shift = static_cast<long>(std::ceil(threshold - zi.re.to_double()));
  }
  Complex product(1L, prec);
  for (long k = 0; k < shift; ++k) product *= zi + k;
  const Real target = mp::pow2(-static_cast<long>(prec), kBoundPrec);
  const Complex lg = log_gamma_stirling(zi + shift, target);
  return (mp::exp(lg) / product).rounded(ctx.working());
}

Complex zeta(const Complex& s, const PrecisionContext& ctx) {
  require_positive_real_part(s, "zeta");
  const Complex si = s.rounded(ctx.internal());
  if (low(mp::abs(si - 1L)) <= mp::pow2(kPoleGuardExponent, kBoundPrec)) {
    throw PoleError("zeta: |s - 1| <= 2^-8; use zeta_minus_pole");
  }
  return zeta_em(si, IntegralTerm::include).rounded(ctx.working());
}

Complex zeta_minus_pole(const Complex& s, const PrecisionContext& ctx) {
  require_positive_real_part(s, "zeta_minus_pole");
  return zeta_em(s.rounded(ctx.internal()), IntegralTerm::pole_subtracted).rounded(ctx.working());
}

Real euler_gamma(const PrecisionContext& ctx) {
  return zeta_minus_pole(Complex(1L, ctx.internal()), ctx).re;
}

Real eval_form(const exact::ZetaLinearForm& form, const PrecisionContext& ctx) {
  if (form.zeta_arg < 2) throw DomainError("eval_form: zeta argument must be >= 2");
  const mp::Prec prec = ctx.internal();
  Real value(form.constant, prec);
  if (!form.is_rational()) {
    const Complex z = zeta_em(Complex(static_cast<long>(form.zeta_arg), prec), IntegralTerm::include);
    value += Real(form.zeta_coeff, prec) * z.re;
  }
  return value.rounded(ctx.working());
}

}  // namespace logzeta::special
