#pragma once

// Independent reference computations used only by tests. None of these share
// code paths with the library kernels they check.

#include <cstdint>
#include <vector>

#include "logzeta/complex.hpp"
#include "logzeta/exact.hpp"

namespace oracle {

using logzeta::exact::BigInt;
using logzeta::exact::Rational;
using logzeta::mp::Complex;
using logzeta::mp::Real;

/// lcm(1..n) by repeated gcd.
BigInt brute_lcm(unsigned n);

/// B_0..B_k from Σ_{j=0}^{m} C(m+1, j) B_j = 0, m ≥ 1.
std::vector<Rational> bernoulli_table(unsigned k);

/// ζ(s) = η(s)/(1 − 2^{1−s}) with η summed by the Cohen–Rodriguez Villegas–Zagier
/// acceleration using `terms` terms. Needs 1 − 2^{1−s} away from zero.
Complex zeta_eta(const Complex& s, logzeta::mp::Prec prec, unsigned terms);

/// Polynomial extrapolation of (x_i, y_i) to x = 0 (Neville).
Real extrapolate_to_zero(const std::vector<Real>& xs, std::vector<Real> ys);

/// γ from H_m − ln m at m = base·2^j, j < points, extrapolated in 1/m.
Real euler_gamma_harmonic(logzeta::mp::Prec prec, unsigned base = 1000, unsigned points = 8);

/// Σ_{k=1}^{n} k^{-s} for real s.
Real dirichlet_partial(long s, unsigned n, logzeta::mp::Prec prec);

/// Deterministic uniform samples of re ∈ (re_lo, re_hi), im ∈ (−im_abs, im_abs).
std::vector<Complex> sample_points(std::uint64_t seed, std::size_t count, double re_lo, double re_hi,
                                   double im_abs, logzeta::mp::Prec prec);

/// |a − b| / |b|.
Real relative_error(const Complex& a, const Complex& b);

}  // namespace oracle
