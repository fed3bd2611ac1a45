#include <doctest.h>

#include "logzeta/special.hpp"
#include "oracles.hpp"

using namespace logzeta;
using namespace logzeta::mp;
using logzeta::exact::Rational;

namespace {

Complex c(double re, double im = 0, Prec prec = 256) { return Complex(Real(re, prec), Real(im, prec)); }
Complex c(long re, Prec prec = 256) { return Complex(re, prec); }

// |a − b| ≤ |b|·2^(bits_off − working), or absolute when b = 0.
bool close(const Complex& a, const Complex& b, long bits_off, const PrecisionContext& ctx) {
  const Real scale = max(abs(b), Real(1e-300, 64));
  return abs(a - b) <= scale * pow2(bits_off - static_cast<long>(ctx.working_bits()), 64);
}

bool close(const Real& a, const Real& b, long bits_off, const PrecisionContext& ctx) {
  return close(Complex(a), Complex(b), bits_off, ctx);
}

}  // namespace

TEST_CASE("precision context") {
  const PrecisionContext ctx;
  CHECK(ctx.working_bits() == 256);
  CHECK(ctx.guard_bits() >= 32);
  CHECK(ctx.internal() == ctx.working() + ctx.guard_bits());
  CHECK_THROWS_AS(PrecisionContext(32), DomainError);
}

TEST_CASE("bernoulli examples") {
  CHECK(special::bernoulli(0) == Rational(1L));
  CHECK(special::bernoulli(2) == Rational(exact::BigInt(1), exact::BigInt(6)));
  CHECK(special::bernoulli(4) == Rational(exact::BigInt(-1), exact::BigInt(30)));
  CHECK_THROWS_AS(special::bernoulli(3), DomainError);
  CHECK_THROWS_AS(special::bernoulli(7), DomainError);
}

TEST_CASE("bernoulli against a fresh recurrence") {
  const auto table = oracle::bernoulli_table(80);
  for (unsigned k = 0; k <= 80; k += 2) {
    CAPTURE(k);
    CHECK(special::bernoulli(k) == table[k]);
  }
  CHECK(table[1] == Rational(exact::BigInt(-1), exact::BigInt(2)));
  CHECK(special::bernoulli(1) == table[1]);
}

TEST_CASE("gamma examples") {
  const PrecisionContext ctx;
  CHECK(close(special::gamma(c(1L), ctx), c(1L), 1, ctx));
  CHECK(close(special::gamma(c(5L), ctx), c(24L), 1, ctx));
  const Complex half = special::gamma(c(0.5), ctx);
  CHECK(close(half * half, Complex(pi(ctx.working())), 2, ctx));
  CHECK(half.re.to_scientific(17) == "1.7724538509055160e+00");
  CHECK_THROWS_AS(special::gamma(c(0L), ctx), PoleError);
  CHECK_THROWS_AS(special::gamma(c(-3L), ctx), PoleError);
  // Reflection side.
  const Complex g = special::gamma(c(-0.5), ctx);
  CHECK(close(g, Complex(Real(-2L, 256) * sqrt(pi(256))), 4, ctx));
}

TEST_CASE("gamma recurrence on random points") {
  const PrecisionContext ctx;
  for (const auto& z : oracle::sample_points(7, 40, 0.1, 10.0, 10.0, ctx.working())) {
    CAPTURE(z.re.to_double());
    CAPTURE(z.im.to_double());
    const Complex lhs = special::gamma(z + 1L, ctx);
    const Complex rhs = z * special::gamma(z, ctx);
    CHECK(oracle::relative_error(rhs, lhs) < pow2(4 - 256, 64));
  }
}

TEST_CASE("zeta examples and closed forms") {
  const PrecisionContext ctx;
  const Real p = pi(ctx.working());
  CHECK(close(special::zeta(c(2L), ctx), Complex(p * p / 6L), 1, ctx));
  CHECK(close(special::zeta(c(4L), ctx), Complex(pow(p, 4L) / 90L), 1, ctx));
  CHECK(special::zeta(c(3L), ctx).re.to_scientific(17) == "1.2020569031595943e+00");
  CHECK(special::zeta(c(0.5), ctx).re.to_scientific(17) == "-1.4603545088095868e+00");
  CHECK_THROWS_AS(special::zeta(c(1L), ctx), PoleError);
  CHECK_THROWS_AS(special::zeta(Complex(Real(1L, 256) + pow2(-9, 256)), ctx), PoleError);
  CHECK_THROWS_AS(special::zeta(c(-0.5), ctx), DomainError);
  CHECK_NOTHROW(special::zeta(Complex(Real(1L, 256) + pow2(-7, 256)), ctx));
}

TEST_CASE("zeta against the Dirichlet partial sum") {
  const PrecisionContext ctx(128);
  const unsigned n = 2000;
  for (long s : {2L, 3L, 5L}) {
    CAPTURE(s);
    const Real partial = oracle::dirichlet_partial(s, n, 160);
    const Real z = special::zeta(c(s, 128), ctx).re;
    // Σ_{k>n} k^{−s} ≤ n^{1−s}/(s−1)
    const Real tail_bound = pow(Real(static_cast<long>(n), 160), 1 - s) / (s - 1);
    CHECK(z - partial >= Real(0L, 64));
    CHECK(z - partial <= tail_bound);
  }
}

TEST_CASE("zeta at 0.5 against the eta oracle") {
  const PrecisionContext ctx(128);
  const Complex e = oracle::zeta_eta(c(0.5, 0, 160), 160, 120);
  CHECK(close(special::zeta(c(0.5, 0, 128), ctx), e, 4, ctx));
}

TEST_CASE("eta acceleration agrees with Euler-Maclaurin at random points") {
  const PrecisionContext ctx(128);
  int checked = 0;
  for (const auto& s : oracle::sample_points(2024, 80, 0.1, 6.0, 6.0, 128)) {
    if (abs(s - 1L) < Real(0.05, 64)) continue;
    if (checked == 64) break;
    ++checked;
    CAPTURE(s.re.to_double());
    CAPTURE(s.im.to_double());
    const Complex oracle_value = oracle::zeta_eta(s.rounded(192), 192, 160);
    CHECK(oracle::relative_error(special::zeta(s, ctx), oracle_value) < pow2(8 - 128, 64));
  }
  CHECK(checked == 64);
}

TEST_CASE("zeta_minus_pole examples and consistency") {
  const PrecisionContext ctx;
  CHECK(special::zeta_minus_pole(c(1L), ctx).re.to_scientific(16) == "5.772156649015329e-01");
  CHECK(special::zeta_minus_pole(c(2L), ctx).re.to_scientific(16) == "6.449340668482264e-01");
  CHECK(special::zeta_minus_pole(c(3L), ctx).re.to_scientific(16) == "7.020569031595943e-01");
  CHECK_THROWS_AS(special::zeta_minus_pole(c(-1L), ctx), DomainError);
  for (const auto& s : oracle::sample_points(99, 30, 0.1, 6.0, 6.0, 256)) {
    if (abs(s - 1L) < Real(0.25, 64)) continue;
    const Complex via_pole = special::zeta_minus_pole(s, ctx) + reciprocal(s - 1L);
    CHECK(abs(via_pole - special::zeta(s, ctx)) < pow2(8 - 256, 64));
  }
  // Continuity through s = 1.
  const Complex near = special::zeta_minus_pole(Complex(Real(1L, 256) + pow2(-40, 256)), ctx);
  CHECK(abs(near - special::zeta_minus_pole(c(1L), ctx)) < pow2(-38, 64));
}

TEST_CASE("euler_gamma") {
  const PrecisionContext ctx(128);
  const Real g = special::euler_gamma(ctx);
  CHECK(g.to_scientific(19).rfind("5.77215664901532860", 0) == 0);
  const Real harmonic = oracle::euler_gamma_harmonic(192);
  CHECK(abs(g - harmonic) < Real(1e-20, 64));
  // Two precisions agree to the coarser one.
  const Real fine = special::euler_gamma(PrecisionContext(512));
  CHECK(abs(fine - g) < pow2(-127, 64));
  // Cross-check with MPFR's own constant.
  Real mpfr_gamma(512L);
  mpfr_const_euler(mpfr_gamma.raw(), MPFR_RNDN);
  CHECK(abs(fine - mpfr_gamma) < pow2(-510, 64));
  CHECK(special::euler_gamma(ctx) == special::zeta_minus_pole(c(1L, 128), ctx).re);
}

TEST_CASE("eval_form examples") {
  const PrecisionContext ctx;
  using exact::ZetaLinearForm;
  const auto two = [](long v) { return Rational(v); };
  CHECK(special::eval_form(ZetaLinearForm{two(0), two(1), 2}, ctx).to_scientific(11) == "1.6449340668e+00");
  CHECK(special::eval_form(ZetaLinearForm{two(-1), two(1), 2}, ctx).to_scientific(11) == "6.4493406685e-01");
  const ZetaLinearForm f{Rational(exact::BigInt(9), exact::BigInt(4)), two(-2), 3};
  CHECK(special::eval_form(f, ctx).to_scientific(10) == "-1.541138063e-01");
  CHECK_THROWS_AS(special::eval_form(ZetaLinearForm{two(0), two(1), 1}, ctx), DomainError);
}
