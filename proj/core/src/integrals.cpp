#include "logzeta/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "logzeta/special.hpp"
#include "logzeta/tanh_sinh.hpp"

namespace logzeta::integrals {

namespace {

constexpr mp::Prec kBoundPrec = 64;

Real low(const Real& x) { return x.rounded_up(kBoundPrec); }

void require_positive(const Real& tol, const char* what) {
  if (tol.sign() <= 0) throw DomainError(std::string(what) + ": tol must be positive");
}

void require_strip(const Complex& z, const char* what) {
  if (z.re <= Real(-2L, 64)) throw DomainError(std::string(what) + ": requires Re(z) > -2");
}

// Relative rounding allowance for `ops` correctly rounded operations at `prec` bits.
Real rounding_allowance(std::uint64_t ops, mp::Prec prec) {
  return mp::pow2(1 - static_cast<long>(prec), kBoundPrec) * static_cast<long>(ops + 4);
}

Real smaller(const Real& a, const Real& b) { return a < b ? a : b; }

// f(x) = Σ_{m=0}^{n} (x+a)^{−(m+1)} (x+b)^{−(n−m+1)}, the k-th series term up to (−1)^n n!.
Real monomial_term(const Real& x, long a, long b, unsigned n) {
  const Real xa = x + a;
  const Real xb = x + b;
  const Real ia = 1L / xa;
  Real pa = ia;
  Real pb = mp::pow(xb, -static_cast<long>(n) - 1);
  Real sum(x.precision());
  for (unsigned m = 0; m <= n; ++m) {
    sum += pa * pb;
    pa *= ia;
    pb *= xb;
  }
  return sum;
}

// Derivative data of the same f in the expanded form
//
//   f(x) = Σ_j c_j (x+a)^{−p_j},  p_j = n+2+j,  c_j = C(n+1+j, j+1) d^j,  d = a − b ≥ 0,
//
// which converges for x + a > d. All c_j ≥ 0, so f is completely monotone.
class ExpandedTail {
 public:
  ExpandedTail(const Real& big_a, long d, unsigned n) : a_(big_a), inv_a_(1L / big_a), d_(d), n_(n) {}

  struct Sum {
    Real value;
    Real truncation;  // bound on the dropped j-terms
    std::uint64_t terms;
  };

  /// Σ_j c_j (p_j)_q A^{−p_j−q} for q ≥ 0, or Σ_j c_j A^{1−p_j}/(p_j − 1) for q = −1.
  Sum derivative_sum(long q, const Real& target) const {
    const mp::Prec prec = a_.precision();
    const long p0 = static_cast<long>(n_) + 2;
    // j = 0 term
    Real term(static_cast<long>(n_) + 1, prec);
    if (q < 0) {
      term = mp::pow(inv_a_, p0 - 1) / (p0 - 1) * static_cast<long>(n_ + 1);
    } else {
      Real poch(1L, prec);
      for (long i = 0; i < q; ++i) poch *= Real(p0 + i, prec);
      term *= poch * mp::pow(inv_a_, p0 + q);
    }
    Sum out{term, Real(kBoundPrec), 1};
    if (d_ == 0) return out;
    const Real half(0.5, kBoundPrec);
    for (long j = 0;; ++j) {
      const long p = p0 + j;
      // t_{j+1}/t_j = d (n+2+j) / (j+2) · ratio of the q-dependent factors / A
      const Real base = Real(d_ * (static_cast<long>(n_) + 2 + j), prec) / (j + 2) * inv_a_;
      // `bound_ratio` dominates every later ratio: base and (p+q)/p decrease in j,
      // and (p−1)/p < 1.
      Real ratio = base;
      Real bound_ratio = base;
      if (q < 0) {
        ratio *= Real(p - 1, prec) / p;
      } else {
        ratio *= Real(p + q, prec) / p;
        bound_ratio = ratio;
      }
      if (low(bound_ratio) <= half && low(abs(term)) < target) {
        // Geometric tail with ratio ≤ 1/2 (ratios decrease in j) is below the current term.
        out.truncation = low(abs(term));
        return out;
      }
      term *= ratio;
      out.value += term;
      ++out.terms;
      if (out.terms > kSeriesTermCap) throw ConvergenceError("series_eval: expansion did not converge");
    }
  }

 private:
  Real a_;
  Real inv_a_;
  long d_;
  unsigned n_;
};

struct TailResult {
  Real value;
  Real bound;
  std::uint64_t terms = 0;
  bool ok = false;
};

// Σ_{k≥K} f(k) by Euler–Maclaurin:
//   ∫_K^∞ f + f(K)/2 + Σ_{i=1}^{M} B_{2i}/(2i)! Σ_j c_j (p_j)_{2i−1} A^{−p_j−2i+1} + R_M.
// f is completely monotone, so |R_M| is at most the first omitted correction.
TailResult monomial_tail(std::uint64_t head, long a, long b, unsigned n, mp::Prec prec, const Real& target) {
  const Real x(static_cast<long>(head), prec);
  const Real big_a = x + a;
  const ExpandedTail expansion(big_a, a - b, n);
  const Real trunc_target = target * mp::pow2(-8, kBoundPrec);

  TailResult out{Real(prec), Real(kBoundPrec), 0, false};
  const auto integral = expansion.derivative_sum(-1, trunc_target);
  out.value = integral.value + monomial_term(x, a, b, n) / 2L;
  Real truncation = integral.truncation;
  out.terms = integral.terms + 1;

  Real previous_size(kBoundPrec);
  for (unsigned i = 1; i < 4000; ++i) {
    const auto d = expansion.derivative_sum(2 * static_cast<long>(i) - 1, trunc_target);
    const Real correction = special::bernoulli_scaled(i, prec) * d.value;
    const Real size = low(abs(special::bernoulli_scaled(i, kBoundPrec))) * (low(d.value) + d.truncation);
    out.terms += d.terms;
    if (size < target) {
      out.bound = (size + truncation).rounded_up(kBoundPrec);
      out.ok = true;
      return out;
    }
    if (i > 2 && size > previous_size) return out;
    previous_size = size;
    out.value += correction;
    truncation += abs(special::bernoulli_scaled(i, kBoundPrec)) * d.truncation;
  }
  return out;
}

std::uint64_t default_monomial_head(long d, mp::Prec prec) {
  const auto by_precision = static_cast<std::uint64_t>(std::ceil(0.12 * static_cast<double>(prec)));
  return std::max<std::uint64_t>({16, 32 * static_cast<std::uint64_t>(d), by_precision});
}

Real log_of(const Real& x, const Real& comp) {
  // ln x for x ∈ (0, 1), accurate near both ends.
  if (x < Real(0.5, 53)) return mp::log(x);
  return mp::log1p(-comp);
}

// (u − 1 − ln u)/(1 − u) = Σ_{j≥1} c^j/(j+1) with c = 1 − u.
Real reduced_weight(const Real& minus_log_u, const Real& c) {
  if (c < Real(0.0625, 53)) {
    const mp::Prec prec = c.precision();
    const Real eps = mp::pow2(-static_cast<long>(prec) - 4, kBoundPrec);
    Real sum(prec);
    Real power = c;
    for (long j = 1; j < 4 * prec; ++j) {
      const Real term = power / (j + 1);
      sum += term;
      if (low(term) < low(sum) * eps) break;
      power *= c;
    }
    return sum;
  }
  return (minus_log_u - c) / c;
}

// t^z for t > 0.
Complex real_power(const Real& t, const Complex& z) {
  if (z.im.is_zero()) return Complex(mp::pow(t, z.re));
  return mp::exp(z * mp::log(t));
}

EvaluationResult finish(Complex value, Real bound, Method method, std::uint64_t effort,
                        const PrecisionContext& ctx, BoundKind kind) {
  // One final rounding to working precision.
  const Real final_rounding = low(mp::abs(value)) * mp::pow2(-static_cast<long>(ctx.working_bits()), kBoundPrec);
  return {value.rounded(ctx.working()), (bound + final_rounding).rounded_up(kBoundPrec), method, effort,
          ctx.working_bits(), kind};
}

}  // namespace

IntegralSpec make_conjecture_spec(const Complex& z) {
  require_strip(z, "conjecture spec");
  return ConjectureSpec{z};
}

std::string describe(const IntegralSpec& spec, int digits) {
  if (const auto* m = std::get_if<exact::MonomialSpec>(&spec)) {
    std::ostringstream os;
    os << "monomial(r=" << m->r << ",s=" << m->s << ",n=" << m->n << ")";
    return os.str();
  }
  const auto& c = std::get<ConjectureSpec>(spec);
  std::string out = "conjecture(z=" + c.z.re.to_scientific(digits);
  if (!c.z.im.is_zero()) out += (c.z.im.sign() < 0 ? "" : "+") + c.z.im.to_scientific(digits) + "i";
  return out + ")";
}

bool spec_less(const IntegralSpec& a, const IntegralSpec& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (const auto* ma = std::get_if<exact::MonomialSpec>(&a)) {
    return *ma < std::get<exact::MonomialSpec>(b);
  }
  const auto& za = std::get<ConjectureSpec>(a).z;
  const auto& zb = std::get<ConjectureSpec>(b).z;
  if (!(za.re == zb.re)) return za.re < zb.re;
  return za.im < zb.im;
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::series: return "series";
    case Method::reduce1d: return "reduce1d";
    case Method::quad2d: return "quad2d";
  }
  return "unknown";
}

std::string_view to_string(BoundKind kind) {
  return kind == BoundKind::rigorous ? "rigorous" : "heuristic";
}

EvaluationResult series_eval(const exact::MonomialSpec& spec, const PrecisionContext& ctx, const Real& tol,
                             const SeriesOptions& options) {
  require_positive(tol, "series_eval");
  const auto canon = exact::canonicalize(spec).spec;
  const long a = static_cast<long>(canon.r) + 1;
  const long b = static_cast<long>(canon.s) + 1;
  const unsigned n = canon.n;
  const mp::Prec prec = ctx.internal();

  const Real scale(exact::factorial(n), prec);  // n!
  const Real target =
      smaller(low(tol) / 4L, mp::pow2(-static_cast<long>(ctx.working_bits()), kBoundPrec)) / low(scale);

  std::uint64_t head = options.head_terms.value_or(default_monomial_head(a - b, prec));
  for (;;) {
    if (head > kSeriesTermCap) throw ConvergenceError("series_eval: term cap exceeded");
    const TailResult tail = monomial_tail(head, a, b, n, prec, target);
    if (!tail.ok) {
      if (options.head_terms) throw ConvergenceError("series_eval: tail did not converge for the given head");
      head *= 2;
      continue;
    }
    Real sum(prec);
    for (std::uint64_t k = 0; k < head; ++k) {
      sum += monomial_term(Real(static_cast<long>(k), prec), a, b, n);
    }
    sum += tail.value;
    Real value = sum * scale;
    if (n % 2 == 1) value = -value;

    const std::uint64_t ops = head * (2 * n + 8) + tail.terms * 6;
    const Real bound = low(scale) * tail.bound + low(abs(value)) * rounding_allowance(ops, prec);
    EvaluationResult result =
        finish(Complex(value), bound, Method::series, head + tail.terms, ctx, BoundKind::rigorous);
    if (!(result.error_bound < low(tol) / 2L)) {
      throw ConvergenceError("series_eval: tolerance is below what the working precision supports");
    }
    return result;
  }
}

EvaluationResult series_eval_conjecture(const Complex& z, const PrecisionContext& ctx, const Real& tol,
                                        const SeriesOptions& options) {
  require_positive(tol, "series_eval_conjecture");
  require_strip(z, "series_eval_conjecture");
  const mp::Prec prec = ctx.internal();
  const Complex zi = z.rounded(prec);
  const Complex w = zi + 1L;  // z + 1
  const Complex s = zi + 2L;  // z + 2

  const Complex gamma = special::gamma(s, PrecisionContext(static_cast<unsigned>(prec)));
  const Real gamma_size = low(mp::abs(gamma));
  const Real target =
      smaller(low(tol) / 4L, mp::pow2(-static_cast<long>(ctx.working_bits()), kBoundPrec)) / gamma_size;

  std::uint64_t head = options.head_terms.value_or(static_cast<std::uint64_t>(
      std::ceil(0.12 * static_cast<double>(prec) + low(mp::abs(s)).to_double() + 8.0)));
  for (;;) {
    if (head > kSeriesTermCap) throw ConvergenceError("series_eval_conjecture: term cap exceeded");
    const special::TailSum tail = special::hurwitz_tail(s, Real(static_cast<long>(head) + 1, prec), target,
                                                        special::IntegralTerm::omit);
    if (!(tail.bound < target)) {
      if (options.head_terms) {
        throw ConvergenceError("series_eval_conjecture: tail did not converge for the given head");
      }
      head *= 2;
      continue;
    }
    // Term k / Γ(z+2) = (k+1)^{−w} [1/(k+1) − D·E(−wD)], D = ln((k+2)/(k+1)), E(x) = (e^x − 1)/x.
    Complex sum(prec);
    Real magnitude(kBoundPrec);
    for (std::uint64_t k = 0; k < head; ++k) {
      const Real k1(static_cast<long>(k) + 1, prec);
      const Real d = mp::log1p(1L / k1);
      const Complex bracket = Complex(1L / k1) - mp::expm1_over(-(w * d)) * d;
      const Complex term = real_power(k1, -w) * bracket;
      magnitude += low(mp::abs(term));
      sum += term;
    }
    sum += tail.value;
    const Complex value = gamma * sum;

    const std::uint64_t ops = head * 40 + tail.terms * 12;
    const Real bound = gamma_size * (tail.bound + (magnitude + low(mp::abs(tail.value))) *
                                                      rounding_allowance(ops, prec));
    EvaluationResult result = finish(value, bound, Method::series, head + tail.terms, ctx, BoundKind::rigorous);
    if (!(result.error_bound < low(tol) / 2L)) {
      throw ConvergenceError("series_eval_conjecture: tolerance is below what the working precision supports");
    }
    return result;
  }
}

EvaluationResult reduce_1d_eval(const Complex& z, const PrecisionContext& ctx, const Real& tol) {
  require_positive(tol, "reduce_1d_eval");
  require_strip(z, "reduce_1d_eval");
  const mp::Prec prec = ctx.internal();
  const Complex zi = z.rounded(prec);

  auto integrand = [&zi](const Real& u, const Real& c) {
    const Real minus_log_u = -log_of(u, c);
    return real_power(minus_log_u, zi) * reduced_weight(minus_log_u, c);
  };
  quad::Settings settings;
  settings.max_level = kQuadratureLevelCap;
  const quad::Outcome outcome = quad::integrate(integrand, prec, low(tol), settings);
  if (!outcome.converged) throw ConvergenceError("reduce_1d_eval: refinement cap reached");
  return finish(outcome.value, outcome.error, Method::reduce1d, outcome.evaluations, ctx, BoundKind::heuristic);
}

EvaluationResult quad_2d_eval(const IntegralSpec& spec, const PrecisionContext& ctx, const Real& tol) {
  require_positive(tol, "quad_2d_eval");
  if (tol < Real(1e-12, 53)) throw DomainError("quad_2d_eval: tol below 1e-12 is not supported");
  const mp::Prec prec = ctx.internal();
  quad::Settings settings;
  settings.max_level = kQuadratureLevelCap;
  settings.min_level = 2;

  quad::Outcome outcome;
  if (const auto* m = std::get_if<exact::MonomialSpec>(&spec)) {
    const long r = m->r;
    const long s = m->s;
    const long n = m->n;
    auto integrand = [r, s, n](const Real& x, const Real& cx, const Real& y, const Real& cy) {
      const Real log_xy = log_of(x, cx) + log_of(y, cy);
      const Real one_minus_xy = cx + cy - cx * cy;
      Real v = mp::pow(log_xy, n) / one_minus_xy;
      if (r > 0) v *= mp::pow(x, r);
      if (s > 0) v *= mp::pow(y, s);
      return Complex(v);
    };
    outcome = quad::integrate_square(integrand, prec, low(tol), settings);
  } else {
    const Complex z = std::get<ConjectureSpec>(spec).z.rounded(prec);
    require_strip(z, "quad_2d_eval");
    auto integrand = [&z](const Real& x, const Real& cx, const Real& y, const Real& cy) {
      const Real minus_log_xy = -(log_of(x, cx) + log_of(y, cy));
      const Real one_minus_xy = cx + cy - cx * cy;
      return real_power(minus_log_xy, z) * (cx / one_minus_xy);
    };
    outcome = quad::integrate_square(integrand, prec, low(tol), settings);
  }
  if (!outcome.converged) throw ConvergenceError("quad_2d_eval: refinement cap reached");
  return finish(outcome.value, outcome.error, Method::quad2d, outcome.evaluations, ctx, BoundKind::heuristic);
}

}  // namespace logzeta::integrals
