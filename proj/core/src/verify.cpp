#include "logzeta/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <numeric>
#include <thread>

#include "logzeta/special.hpp"

namespace logzeta::verify {

namespace {

constexpr mp::Prec kBoundPrec = 64;

Real low(const Real& x) { return x.rounded_up(kBoundPrec); }

Real relative_rounding(const Complex& v, unsigned bits, long slack_bits) {
  return (low(mp::abs(v)) * mp::pow2(slack_bits - static_cast<long>(bits), kBoundPrec)).rounded_up(kBoundPrec);
}

Comparison compare(std::string a, const Complex& va, const Real& ba, std::string b, const Complex& vb,
                   const Real& bb, const Real& requested) {
  Comparison c;
  c.method_a = std::move(a);
  c.method_b = std::move(b);
  c.value_a = va;
  c.value_b = vb;
  c.delta = mp::abs(va - vb).rounded_up(kBoundPrec);
  c.bound_sum = (low(ba) + low(bb)).rounded_up(kBoundPrec);
  c.requested_tol = low(requested);
  c.tolerance = (c.bound_sum + c.requested_tol).rounded_up(kBoundPrec);
  c.passed = c.delta.is_finite() && c.delta <= c.tolerance;
  return c;
}

Comparison compare(const EvaluationResult& a, const EvaluationResult& b, const Real& requested) {
  return compare(std::string(integrals::to_string(a.method)), a.value, a.error_bound,
                 std::string(integrals::to_string(b.method)), b.value, b.error_bound, requested);
}

Comparison compare(const ClosedFormValue& a, const std::string& label, const EvaluationResult& b,
                   const Real& requested) {
  return compare(label, a.value, a.error_bound, std::string(integrals::to_string(b.method)), b.value,
                 b.error_bound, requested);
}

void append_note(VerificationRecord& record, const std::string& note) {
  if (!record.notes.empty()) record.notes += "; ";
  record.notes += note;
}

// Runs make(i) for i in [0, count) on `jobs` threads; each slot is written by
// exactly one task.
std::vector<VerificationRecord> run_tasks(std::size_t count, unsigned jobs,
                                          const std::function<VerificationRecord(std::size_t)>& make) {
  std::vector<std::optional<VerificationRecord>> slots(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) slots[i] = make(i);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  std::vector<VerificationRecord> out;
  out.reserve(count);
  for (auto& slot : slots) out.push_back(std::move(*slot));
  std::stable_sort(out.begin(), out.end(), [](const VerificationRecord& a, const VerificationRecord& b) {
    return integrals::spec_less(a.spec, b.spec);
  });
  return out;
}

bool expect_sign(const EvaluationResult& result, unsigned n) {
  const int sign = result.value.re.sign();
  return n % 2 == 0 ? sign > 0 : sign < 0;
}

VerificationRecord verify_monomial(const exact::MonomialSpec& spec, bool with_quad, const PrecisionContext& ctx,
                                   const Options& options) {
  VerificationRecord record;
  record.spec = spec;
  try {
    ClosedFormValue closed;
    if (spec.r != spec.s) {
      const auto exact_value = exact::theorem1a_value(spec);
      closed.expression = exact_value.value.to_string();
      closed.value = Complex(Real(exact_value.value, ctx.working()));
      closed.error_bound = relative_rounding(closed.value, ctx.working_bits(), 0);
      record.divisibility = exact::divisibility_check(spec);
      if (exact_value.swapped) append_note(record, "r<s evaluated as the swapped spec");
    } else {
      const auto form = exact::theorem1b_form(spec.r, spec.n);
      closed.expression = form.to_string();
      closed.value = Complex(special::eval_form(form, ctx));
      closed.error_bound = relative_rounding(closed.value, ctx.working_bits(), 2);
    }
    record.closed_form = closed;

    const auto series = integrals::series_eval(spec, ctx, options.tol);
    record.method_values.push_back(series);
    record.comparisons.push_back(compare(closed, "closed_form", series, options.tol));
    if (!expect_sign(series, spec.n)) append_note(record, "series value has the wrong sign");

    if (with_quad) {
      const auto quad = integrals::quad_2d_eval(spec, options.quad_ctx, options.quad_tol);
      record.method_values.push_back(quad);
      record.comparisons.push_back(compare(closed, "closed_form", quad, options.quad_tol));
      record.comparisons.push_back(compare(series, quad, options.quad_tol));
    }
  } catch (const std::exception& e) {
    append_note(record, std::string("error: ") + e.what());
  }
  finalize(record);
  if (record.divisibility && !record.divisibility->holds) {
    record.passed = false;
    append_note(record, "denominator does not divide d_r^(n+2)");
  }
  for (const auto& v : record.method_values) {
    if (!expect_sign(v, spec.n)) record.passed = false;
  }
  return record;
}

VerificationRecord verify_point(const Complex& z, const PrecisionContext& ctx, const Options& options) {
  VerificationRecord record;
  record.spec = integrals::ConjectureSpec{z};
  try {
    ClosedFormValue rhs;
    rhs.expression = "Gamma(z+2)*(zeta(z+2) - 1/(z+1))";
    rhs.value = rhs_value(z, ctx);
    rhs.error_bound = relative_rounding(rhs.value, ctx.working_bits(), 4);
    record.closed_form = rhs;

    const auto series = integrals::series_eval_conjecture(z, ctx, options.tol);
    record.method_values.push_back(series);
    const Real reduce_tol = options.reduce_tol < options.tol ? options.tol : options.reduce_tol;
    const auto reduced = integrals::reduce_1d_eval(z, ctx, reduce_tol);
    record.method_values.push_back(reduced);

    record.comparisons.push_back(compare(rhs, "rhs", series, options.tol));
    record.comparisons.push_back(compare(rhs, "rhs", reduced, options.tol));
    record.comparisons.push_back(compare(series, reduced, options.tol));

    if (options.conjecture_quad) {
      const auto quad = integrals::quad_2d_eval(record.spec, options.quad_ctx, options.quad_tol);
      record.method_values.push_back(quad);
      record.comparisons.push_back(compare(rhs, "rhs", quad, options.quad_tol));
    }

    // Integer z = n ≥ 0: the exact corollary form must match the numeric right side.
    if (z.im.is_zero() && z.re.sign() >= 0 && mpfr_integer_p(z.re.raw()) && z.re < Real(1000L, 64)) {
      const auto n = static_cast<unsigned>(z.re.to_double());
      const auto form = exact::corollary_form(n);
      const Complex value(special::eval_form(form, ctx));
      record.comparisons.push_back(compare("rhs", rhs.value, rhs.error_bound, "corollary_form", value,
                                           relative_rounding(value, ctx.working_bits(), 2), options.tol));
      append_note(record, "corollary_form(" + std::to_string(n) + ") = " + form.to_string());
    }
    if (z.im.is_zero()) {
      for (const auto& v : record.method_values) {
        if (v.value.re.sign() <= 0) append_note(record, "left-hand side is not positive for real z");
      }
    }
  } catch (const std::exception& e) {
    append_note(record, std::string("error: ") + e.what());
  }
  finalize(record);
  if (record.notes.find("not positive") != std::string::npos) record.passed = false;
  return record;
}

bool involves_quadrature(const Comparison& c) {
  const auto quad = integrals::to_string(integrals::Method::quad2d);
  return c.method_a == quad || c.method_b == quad;
}

}  // namespace

GridSpec default_grid(mp::Prec prec) {
  GridSpec grid;
  for (const char* z : {"-1.9", "-1.5", "-1", "-0.5", "0", "0.5", "1", "2", "3.7", "5"}) {
    grid.real_points.emplace_back(Real::parse(z, prec));
  }
  const std::pair<const char*, const char*> complex_points[] = {
      {"-0.5", "1"}, {"1", "2"}, {"0.25", "-3"}, {"2", "4"}};
  for (const auto& [re, im] : complex_points) {
    grid.complex_points.emplace_back(Real::parse(re, prec), Real::parse(im, prec));
  }
  return grid;
}

void validate(const GridSpec& grid) {
  const Real limit(-2L, 64);
  for (const auto* points : {&grid.real_points, &grid.complex_points}) {
    for (const auto& z : *points) {
      if (z.re <= limit) throw DomainError("grid point with Re(z) <= -2");
    }
  }
}

Complex rhs_value(const Complex& z, const PrecisionContext& ctx) {
  if (z.re <= Real(-2L, 64)) throw DomainError("rhs_value: requires Re(z) > -2");
  const PrecisionContext inner(static_cast<unsigned>(ctx.internal()));
  const Complex s = z.rounded(ctx.internal()) + 2L;
  return (special::gamma(s, inner) * special::zeta_minus_pole(s, inner)).rounded(ctx.working());
}

VerificationRecord verify_spec(const IntegralSpec& spec, const PrecisionContext& ctx, const Options& options,
                               bool with_quad) {
  if (const auto* m = std::get_if<exact::MonomialSpec>(&spec)) return verify_monomial(*m, with_quad, ctx, options);
  Options local = options;
  local.conjecture_quad = with_quad;
  return verify_point(std::get<integrals::ConjectureSpec>(spec).z, ctx, local);
}

std::vector<VerificationRecord> verify_theorem1(const MonomialBox& box, const PrecisionContext& ctx,
                                                const Options& options) {
  std::vector<exact::MonomialSpec> specs;
  for (unsigned r = 0; r <= box.r_max; ++r) {
    for (unsigned s = 0; s <= box.s_max; ++s) {
      for (unsigned n = 0; n <= box.n_max; ++n) specs.push_back({r, s, n});
    }
  }
  return run_tasks(specs.size(), options.jobs, [&](std::size_t i) {
    const bool with_quad = options.quad_stride > 0 && i % options.quad_stride == 0;
    return verify_monomial(specs[i], with_quad, ctx, options);
  });
}

std::vector<VerificationRecord> verify_conjecture(const GridSpec& grid, const PrecisionContext& ctx,
                                                  const Options& options) {
  validate(grid);
  std::vector<Complex> points = grid.real_points;
  points.insert(points.end(), grid.complex_points.begin(), grid.complex_points.end());
  auto records = run_tasks(points.size(), options.jobs,
                           [&](std::size_t i) { return verify_point(points[i], ctx, options); });
  const MonomialBox& box = grid.monomial_box;
  if (box.r_max + box.s_max + box.n_max > 0) {
    auto monomials = verify_theorem1(box, ctx, options);
    monomials.insert(monomials.end(), std::make_move_iterator(records.begin()),
                     std::make_move_iterator(records.end()));
    return monomials;
  }
  return records;
}

LimitStudy gamma_limit_study(const std::vector<Real>& offsets, const PrecisionContext& ctx, const Real& tol) {
  if (offsets.empty()) throw UsageError("gamma_limit_study: at least one offset is required");
  const Real one(1L, 64);
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    if (offsets[i].sign() <= 0 || offsets[i] >= one) {
      throw UsageError("gamma_limit_study: offsets must lie in (0, 1)");
    }
    if (i > 0 && !(offsets[i] < offsets[i - 1])) {
      throw UsageError("gamma_limit_study: offsets must be strictly decreasing");
    }
  }
  const mp::Prec prec = ctx.internal();
  LimitStudy study{{}, {}, Real(prec), Real(prec), Real(kBoundPrec)};
  std::vector<Real> values;
  std::vector<Real> eps;
  for (const Real& e : offsets) {
    const Real epsilon = e.rounded(prec);
    const Complex z(epsilon - 1L);
    study.offsets.push_back(e);
    study.estimates.push_back(integrals::series_eval_conjecture(z, ctx, tol));
    values.push_back(study.estimates.back().value.re.rounded(prec));
    eps.push_back(epsilon);
  }
  // Neville's scheme evaluated at ε = 0.
  for (std::size_t m = 1; m < values.size(); ++m) {
    for (std::size_t i = 0; i + m < values.size(); ++i) {
      values[i] = (eps[i] * values[i + 1] - eps[i + m] * values[i]) / (eps[i] - eps[i + m]);
    }
  }
  study.extrapolated = values.front().rounded(ctx.working());
  study.reference = special::euler_gamma(ctx);
  study.reference_delta = mp::abs(study.extrapolated - study.reference).rounded_up(kBoundPrec);
  return study;
}

VerificationRecord limit_record(const LimitStudy& study, const Real& threshold) {
  VerificationRecord record;
  record.spec = integrals::ConjectureSpec{Complex(-1L, study.reference.precision())};
  record.closed_form = ClosedFormValue{"euler_gamma = zeta_minus_pole(1)", Complex(study.reference),
                                       Real(kBoundPrec)};
  record.method_values = study.estimates;
  Comparison c = compare("richardson", Complex(study.extrapolated), Real(kBoundPrec), "euler_gamma",
                         Complex(study.reference), Real(kBoundPrec), threshold);
  record.comparisons.push_back(c);
  std::string offsets = "limit study at z = -1 + eps, eps in {";
  for (std::size_t i = 0; i < study.offsets.size(); ++i) {
    offsets += (i ? ", " : "") + study.offsets[i].to_scientific(6);
  }
  record.notes = offsets + "}";
  finalize(record);
  return record;
}

void rethreshold(std::vector<VerificationRecord>& records, const Real& tol) {
  for (auto& record : records) {
    for (auto& c : record.comparisons) {
      // Quadrature comparisons keep their own (coarser) tolerance.
      if (involves_quadrature(c)) continue;
      c.requested_tol = low(tol);
      c.tolerance = (c.bound_sum + c.requested_tol).rounded_up(kBoundPrec);
      c.passed = c.delta.is_finite() && c.delta <= c.tolerance;
    }
    const bool divisibility_ok = !record.divisibility || record.divisibility->holds;
    finalize(record);
    record.passed = record.passed && divisibility_ok;
  }
}

void finalize(VerificationRecord& record) {
  record.max_delta = Real(kBoundPrec);
  record.tolerance = Real(kBoundPrec);
  bool all_finite = true;
  for (const auto& v : record.method_values) all_finite = all_finite && v.value.is_finite();
  bool all_passed = !record.comparisons.empty();
  Real worst_ratio(-1L, kBoundPrec);
  for (const auto& c : record.comparisons) {
    all_passed = all_passed && c.passed;
    const Real ratio = c.tolerance.is_zero() ? Real(c.delta.is_zero() ? 0L : 1L << 30, kBoundPrec)
                                             : (c.delta / c.tolerance).rounded_up(kBoundPrec);
    if (worst_ratio < ratio) {
      worst_ratio = ratio;
      record.max_delta = c.delta;
      record.tolerance = c.tolerance;
    }
  }
  record.passed = all_passed && all_finite && record.notes.find("error:") == std::string::npos;
}

}  // namespace logzeta::verify
