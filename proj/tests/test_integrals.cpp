#include <doctest.h>

#include <thread>

#include "logzeta/integrals.hpp"
#include "logzeta/special.hpp"
#include "logzeta/tanh_sinh.hpp"

using namespace logzeta;
using namespace logzeta::mp;
using namespace logzeta::integrals;

namespace {

Complex cz(const char* re, const char* im = "0", Prec prec = 256) {
  return Complex(Real::parse(re, prec), Real::parse(im, prec));
}

const PrecisionContext kCtx;
const Real kTol(1e-20, 64);

}  // namespace

TEST_CASE("tanh-sinh nodes stay inside the interval") {
  for (unsigned level : {0u, 3u, 6u}) {
    const auto table = quad::nodes(level, 128);
    REQUIRE(!table->empty());
    for (const auto& node : *table) {
      CHECK(node.u.sign() > 0);
      CHECK(node.comp.sign() > 0);
      CHECK(abs(node.u + node.comp - 1L) < pow2(-120, 64));
      CHECK(node.weight.sign() >= 0);
    }
  }
  CHECK(quad::nodes(4, 128) == quad::nodes(4, 128));
}

TEST_CASE("node cache is safe under concurrent first use") {
  std::vector<std::shared_ptr<const std::vector<quad::Node>>> seen(8);
  {
    std::vector<std::jthread> threads;
    for (int t = 0; t < 8; ++t) {
      threads.emplace_back([t, &seen] { seen[t] = quad::nodes(7, 200); });
    }
  }
  for (const auto& table : seen) {
    REQUIRE(table);
    CHECK(table->size() == seen[0]->size());
    CHECK(table->back().u == seen[0]->back().u);
  }
}

TEST_CASE("tanh-sinh integrates simple endpoint singularities") {
  // ∫ u^{-1/2} = 2, ∫ −ln u = 1
  const auto a = quad::integrate([](const Real& u, const Real&) { return Complex(1L / sqrt(u)); }, 192,
                                 Real(1e-40, 64));
  CHECK(a.converged);
  CHECK(abs(a.value - 2L) < Real(1e-38, 64));
  const auto b = quad::integrate([](const Real&, const Real& c) { return Complex(-log1p(-c)); }, 192,
                                 Real(1e-40, 64));
  CHECK(b.converged);
  CHECK(abs(b.value - 1L) < Real(1e-38, 64));
}

TEST_CASE("describe and ordering") {
  CHECK(describe(exact::MonomialSpec{2, 0, 1}) == "monomial(r=2,s=0,n=1)");
  const IntegralSpec z = make_conjecture_spec(cz("-0.5", "1"));
  CHECK(describe(z, 3) == "conjecture(z=-5.00e-01+1.00e+00i)");
  CHECK(spec_less(exact::MonomialSpec{9, 9, 9}, z));
  CHECK(spec_less(exact::MonomialSpec{1, 2, 3}, exact::MonomialSpec{1, 3, 0}));
  CHECK_FALSE(spec_less(z, z));
  CHECK_THROWS_AS(make_conjecture_spec(cz("-2")), DomainError);
}

TEST_CASE("series_eval examples") {
  auto r = series_eval({1, 0, 0}, kCtx, kTol);
  CHECK(abs(r.value - 1L) < kTol);
  CHECK(r.error_bound < kTol);
  CHECK(r.method == Method::series);
  CHECK(r.bound_kind == BoundKind::rigorous);
  CHECK(r.precision_bits == 256);
  r = series_eval({0, 0, 0}, kCtx, kTol);
  CHECK(abs(r.value - special::zeta(Complex(2L, 256), kCtx)) < kTol);
  r = series_eval({2, 0, 1}, kCtx, kTol);
  CHECK(abs(r.value + Real(0.625, 64)) < kTol);
  CHECK_THROWS_AS(series_eval({1, 0, 0}, kCtx, Real(0L, 64)), DomainError);
}

TEST_CASE("series bounds are rigorous against exact values") {
  const Real tol(1e-30, 64);
  for (unsigned r = 0; r <= 7; ++r) {
    for (unsigned s = 0; s <= 7; ++s) {
      for (unsigned n = 0; n <= 4; ++n) {
        CAPTURE(r);
        CAPTURE(s);
        CAPTURE(n);
        const auto result = series_eval({r, s, n}, kCtx, tol);
        Real exact_value(320L);
        if (r != s) {
          exact_value = Real(exact::theorem1a_value({r, s, n}).value, 320);
        } else {
          exact_value = special::eval_form(exact::theorem1b_form(r, n), PrecisionContext(320));
        }
        CHECK(abs(result.value - exact_value) <= result.error_bound + pow2(-300, 64) * abs(exact_value));
        // Sign (−1)^n.
        CHECK(result.value.re.sign() == (n % 2 == 0 ? 1 : -1));
      }
    }
  }
}

TEST_CASE("series symmetry and oversumming") {
  for (unsigned n = 0; n <= 3; ++n) {
    const auto a = series_eval({5, 2, n}, kCtx, kTol);
    const auto b = series_eval({2, 5, n}, kCtx, kTol);
    CHECK(abs(a.value - b.value) <= a.error_bound * 2L);
    for (std::uint64_t head : {40u, 200u}) {
      SeriesOptions once{head};
      SeriesOptions twice{2 * head};
      const auto x = series_eval({5, 2, n}, kCtx, kTol, once);
      const auto y = series_eval({5, 2, n}, kCtx, kTol, twice);
      CHECK(x.effort != y.effort);
      CHECK(abs(x.value - y.value) <= x.error_bound + y.error_bound);
    }
  }
}

TEST_CASE("series_eval_conjecture examples") {
  auto r = series_eval_conjecture(cz("0"), kCtx, kTol);
  CHECK(abs(r.value - special::zeta_minus_pole(Complex(2L, 256), kCtx)) < kTol);
  r = series_eval_conjecture(cz("1"), kCtx, kTol);
  CHECK(r.value.re.to_scientific(11) == "1.4041138063e+00");
  r = series_eval_conjecture(cz("-1"), kCtx, kTol);
  CHECK(abs(r.value - special::euler_gamma(kCtx)) < kTol);
  CHECK_THROWS_AS(series_eval_conjecture(cz("-2.5"), kCtx, kTol), DomainError);
}

TEST_CASE("conjecture series oversumming") {
  for (const char* z : {"-1.5", "-1", "0.5", "3.7"}) {
    const auto x = series_eval_conjecture(cz(z), kCtx, kTol, SeriesOptions{60});
    const auto y = series_eval_conjecture(cz(z), kCtx, kTol, SeriesOptions{120});
    CHECK(abs(x.value - y.value) <= x.error_bound + y.error_bound);
  }
}

TEST_CASE("conjecture lhs is positive and real for real z, continuous in z") {
  for (const char* z : {"-1.9", "-1.5", "-1", "-0.5", "0", "0.5", "1", "2", "3.7", "5"}) {
    CAPTURE(z);
    const Complex zz = cz(z);
    const auto a = series_eval_conjecture(zz, kCtx, kTol);
    CHECK(a.value.re.sign() > 0);
    CHECK(abs(a.value.im) <= a.error_bound);
    const auto b = series_eval_conjecture(zz + Real(1e-6, 256), kCtx, kTol);
    const Real jump = abs(a.value - b.value);
    CHECK(jump < Real(1e-5, 64) * (abs(a.value) * 4L + 1L));
    CHECK(jump > Real(1e-9, 64));
  }
  // Straddling z = −1 from both sides.
  const auto left = series_eval_conjecture(cz("-1.000001"), kCtx, kTol);
  const auto right = series_eval_conjecture(cz("-0.999999"), kCtx, kTol);
  CHECK(abs(left.value - right.value) < Real(1e-5, 64));
}

TEST_CASE("reduce_1d_eval examples") {
  const Real tol(1e-15, 64);
  auto r = reduce_1d_eval(cz("0"), kCtx, tol);
  CHECK(r.bound_kind == BoundKind::heuristic);
  CHECK(abs(r.value - special::zeta_minus_pole(Complex(2L, 256), kCtx)) < Real(1e-14, 64));
  r = reduce_1d_eval(cz("2"), kCtx, tol);
  CHECK(r.value.re.to_scientific(11) == "4.4939394023e+00");
  r = reduce_1d_eval(cz("-1.5"), kCtx, tol);
  const auto s = series_eval_conjecture(cz("-1.5"), kCtx, kTol);
  CHECK(abs(r.value - s.value) <= r.error_bound + s.error_bound);
  CHECK_THROWS_AS(reduce_1d_eval(cz("-2"), kCtx, tol), DomainError);
}

TEST_CASE("quad_2d_eval examples") {
  const PrecisionContext ctx(64);
  const Real tol(1e-9, 64);
  auto r = quad_2d_eval(exact::MonomialSpec{0, 0, 0}, ctx, tol);
  CHECK(r.method == Method::quad2d);
  CHECK(abs(r.value - special::zeta(Complex(2L, 128), PrecisionContext(128))) < Real(1e-9, 64));
  r = quad_2d_eval(make_conjecture_spec(cz("0", "0", 64)), ctx, tol);
  CHECK(abs(r.value - Real(0.6449340668482264, 64)) < Real(1e-9, 64));
  CHECK_THROWS_AS(quad_2d_eval(exact::MonomialSpec{0, 0, 0}, ctx, Real(1e-13, 64)), DomainError);
}

TEST_CASE("series term formula agrees with 2-D quadrature") {
  // Validation gate for the closed-form term used by series_eval_conjecture.
  const PrecisionContext quad_ctx(64);
  const Real tol(1e-9, 64);
  const std::pair<const char*, const char*> points[] = {{"0", "0"},    {"1", "0"},    {"2.5", "0"},
                                                        {"-0.5", "0"}, {"-1.5", "0"}, {"1", "1"}};
  for (const auto& [re, im] : points) {
    CAPTURE(re);
    CAPTURE(im);
    const auto series = series_eval_conjecture(cz(re, im), kCtx, kTol);
    const auto quad = quad_2d_eval(make_conjecture_spec(cz(re, im, 64)), quad_ctx, tol);
    CHECK(abs(series.value - quad.value) <= Real(1e-9, 64));
  }
}
