#pragma once

// Special-function kernels: Bernoulli numbers, Γ, ζ, the pole-subtracted
// ζ(s) − 1/(s−1), and Euler's constant. Domain is ℜ(s) > 0 for zeta; no
// functional-equation continuation.

#include "logzeta/exact.hpp"
#include "logzeta/precision.hpp"

namespace logzeta::special {

using mp::Complex;
using mp::Real;

/// zeta() refuses arguments with |s − 1| ≤ 2^kPoleGuardExponent.
inline constexpr long kPoleGuardExponent = -8;

/// Exact Bernoulli number B_k (B_1 = −1/2 convention). Odd k > 1 is rejected.
exact::Rational bernoulli(unsigned k);

/// Γ(z). Throws PoleError at z ∈ {0, −1, −2, ...}.
Complex gamma(const Complex& z, const PrecisionContext& ctx);

/// ζ(s) for ℜ(s) > 0, |s − 1| > 2^-8. Throws DomainError / PoleError.
Complex zeta(const Complex& s, const PrecisionContext& ctx);

/// ζ(s) − 1/(s−1) for ℜ(s) > 0, analytic through s = 1 (value γ there).
Complex zeta_minus_pole(const Complex& s, const PrecisionContext& ctx);

/// Euler's constant, as zeta_minus_pole(1).
Real euler_gamma(const PrecisionContext& ctx);

/// constant + zeta_coeff·ζ(zeta_arg).
Real eval_form(const exact::ZetaLinearForm& form, const PrecisionContext& ctx);

// ---------------------------------------------------------------------------
// Building blocks shared with the integral evaluators.

/// How the ∫_A^∞ x^{-s} dx = A^{1−s}/(s−1) term enters an Euler–Maclaurin tail.
enum class IntegralTerm {
  include,          // A^{1−s}/(s−1)
  pole_subtracted,  // (A^{1−s} − 1)/(s−1), evaluated through expm1
  omit,
};

struct TailSum {
  Complex value;
  Real bound;      // rigorous bound on the Euler–Maclaurin remainder
  unsigned terms;  // Bernoulli corrections used
};

/// Σ_{k≥0} (A + k)^{−s} by Euler–Maclaurin with no explicit head terms:
///
///   A^{1−s}/(s−1) + A^{−s}/2 + Σ_{j=1}^{M} B_{2j}/(2j)! · (s)_{2j−1} · A^{−s−2j+1} + R_M,
///   |R_M| ≤ 4 |(s)_{2M}| / ((2π)^{2M} (σ + 2M − 1) A^{σ+2M−1}),   σ = ℜ(s).
///
/// M grows until |R_M| < target or the bound stops shrinking; in the latter case
/// the returned bound is ≥ target and the caller needs a larger A.
TailSum hurwitz_tail(const Complex& s, const Real& a, const Real& target, IntegralTerm mode);

/// B_{2j}/(2j)! rounded to `prec`.
Real bernoulli_scaled(unsigned j, mp::Prec prec);

}  // namespace logzeta::special
