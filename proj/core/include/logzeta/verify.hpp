#pragma once

// Desk-scale verification sweeps: monomial boxes against the exact closed
// forms, conjecture grids against Γ(z+2)[ζ(z+2) − 1/(z+1)], and the z → −1
// limit study. Grid points are independent tasks; results are sorted before
// they are returned, so the output does not depend on the number of jobs.

#include <optional>
#include <string>
#include <vector>

#include "logzeta/exact.hpp"
#include "logzeta/integrals.hpp"
#include "logzeta/precision.hpp"

namespace logzeta::verify {

using integrals::EvaluationResult;
using integrals::IntegralSpec;
using mp::Complex;
using mp::Real;

/// Numeric value of a closed form, with its (rigorous) rounding bound.
struct ClosedFormValue {
  std::string expression;  // "-5/8", "zeta(3)*-2 + 9/4", "Gamma(z+2)*(zeta(z+2) - 1/(z+1))"
  Complex value;
  Real error_bound;
};

/// One pairwise check. tolerance = bound_sum + requested_tol.
struct Comparison {
  std::string method_a;
  std::string method_b;
  Complex value_a;
  Complex value_b;
  Real delta;
  Real bound_sum;
  Real requested_tol;
  Real tolerance;
  bool passed = false;
};

struct VerificationRecord {
  IntegralSpec spec;
  std::optional<ClosedFormValue> closed_form;
  std::vector<EvaluationResult> method_values;
  std::vector<Comparison> comparisons;
  std::optional<exact::DivisibilityWitness> divisibility;
  // The comparison with the largest delta/tolerance ratio; passed implies
  // max_delta ≤ tolerance.
  Real max_delta;
  Real tolerance;
  bool passed = false;
  std::string notes;
};

struct MonomialBox {
  unsigned r_max = 0;
  unsigned s_max = 0;
  unsigned n_max = 0;
};

struct GridSpec {
  std::vector<Complex> real_points;
  std::vector<Complex> complex_points;
  MonomialBox monomial_box;
};

/// Real {−1.9, −1.5, −1, −0.5, 0, 0.5, 1, 2, 3.7, 5}; complex {−0.5+i, 1+2i, 0.25−3i, 2+4i}.
GridSpec default_grid(mp::Prec prec);

/// Throws DomainError if any point has ℜ(z) ≤ −2.
void validate(const GridSpec& grid);

struct Options {
  Real tol = Real(1e-30, 64);
  /// Tolerance requested from (and allowed against) the 2-D quadrature.
  Real quad_tol = Real(1e-9, 64);
  /// Tolerance requested from the 1-D reduction; comparisons still use `tol`
  /// plus the reported bounds.
  Real reduce_tol = Real(1e-20, 64);
  PrecisionContext quad_ctx = PrecisionContext(64);
  /// quad_2d runs on every `quad_stride`-th monomial spec (by enumeration index); 0 disables it.
  unsigned quad_stride = 4;
  /// Also run quad_2d on conjecture points.
  bool conjecture_quad = false;
  unsigned jobs = 1;
};

/// Γ(z+2) · (ζ(z+2) − 1/(z+1)) evaluated as Γ(z+2) · zeta_minus_pole(z+2); valid at z = −1.
Complex rhs_value(const Complex& z, const PrecisionContext& ctx);

/// Single-spec record: closed form against series (and reduce_1d for
/// conjecture points), plus quad_2d when `with_quad` is set.
VerificationRecord verify_spec(const IntegralSpec& spec, const PrecisionContext& ctx, const Options& options,
                               bool with_quad);

/// Every (r, s, n) in [0, r_max] × [0, s_max] × [0, n_max].
std::vector<VerificationRecord> verify_theorem1(const MonomialBox& box, const PrecisionContext& ctx,
                                                const Options& options);

std::vector<VerificationRecord> verify_conjecture(const GridSpec& grid, const PrecisionContext& ctx,
                                                  const Options& options);

struct LimitStudy {
  std::vector<Real> offsets;
  std::vector<EvaluationResult> estimates;  // left-hand side at z = −1 + ε
  Real extrapolated;                        // polynomial (Richardson) extrapolation to ε = 0
  Real reference;                           // euler_gamma
  Real reference_delta;
};

/// Offsets must be non-empty, in (0, 1) and strictly decreasing; UsageError otherwise.
LimitStudy gamma_limit_study(const std::vector<Real>& offsets, const PrecisionContext& ctx, const Real& tol);

/// Packs a limit study as a record: passes when reference_delta ≤ threshold.
VerificationRecord limit_record(const LimitStudy& study, const Real& threshold);

/// Re-evaluates pass flags from the stored deltas with a new requested tolerance.
void rethreshold(std::vector<VerificationRecord>& records, const Real& tol);

/// Recomputes max_delta / tolerance / passed from the comparisons.
void finalize(VerificationRecord& record);

}  // namespace logzeta::verify
