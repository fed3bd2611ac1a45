#pragma once

// Three independent evaluators for the double integrals
//
//   Monomial(r, s, n):  ∫∫ ln^n(xy)/(1−xy) · x^r y^s dx dy
//   Conjecture(z):      ∫∫ [−ln(xy)]^z/(1−xy) · (1−x) dx dy,   ℜ(z) > −2
//
// over the open unit square. On that square −ln(xy) is a positive real, so
// t^z = exp(z ln t) with the real logarithm; no branch cut is ever crossed.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "logzeta/exact.hpp"
#include "logzeta/precision.hpp"

namespace logzeta::integrals {

using mp::Complex;
using mp::Real;

struct ConjectureSpec {
  Complex z;
};

using IntegralSpec = std::variant<exact::MonomialSpec, ConjectureSpec>;

/// Throws DomainError when ℜ(z) ≤ −2.
IntegralSpec make_conjecture_spec(const Complex& z);

/// "monomial(r=2,s=0,n=1)" / "conjecture(z=...)" with `digits` significant digits.
std::string describe(const IntegralSpec& spec, int digits = 20);

/// Total order used for deterministic reports: monomials by (r, s, n) first,
/// then conjecture points by (ℜz, ℑz).
bool spec_less(const IntegralSpec& a, const IntegralSpec& b);

enum class Method { series, reduce1d, quad2d };
std::string_view to_string(Method method);

enum class BoundKind { rigorous, heuristic };
std::string_view to_string(BoundKind kind);

struct EvaluationResult {
  Complex value;
  Real error_bound;
  Method method = Method::series;
  std::uint64_t effort = 0;  // terms summed or integrand evaluations
  unsigned precision_bits = 0;
  BoundKind bound_kind = BoundKind::rigorous;
};

inline constexpr std::uint64_t kSeriesTermCap = 10'000'000;
inline constexpr unsigned kQuadratureLevelCap = 12;

struct SeriesOptions {
  /// Number of explicitly summed terms before the Euler–Maclaurin tail; chosen
  /// automatically when empty.
  std::optional<std::uint64_t> head_terms;
};

/// Σ_k of the closed-form integrals of (xy)^k ln^n(xy) x^r y^s, with the tail
/// k ≥ K summed by Euler–Maclaurin under a rigorous remainder bound.
EvaluationResult series_eval(const exact::MonomialSpec& spec, const PrecisionContext& ctx,
                             const Real& tol, const SeriesOptions& options = {});

/// Σ_k ∫_0^∞ t^z e^{−(k+1)t}(t − 1 + e^{−t}) dt with the stable bracket form,
/// tail by Euler–Maclaurin. Continuous through z = −1.
EvaluationResult series_eval_conjecture(const Complex& z, const PrecisionContext& ctx,
                                        const Real& tol, const SeriesOptions& options = {});

/// ∫_0^1 [−ln u]^z (u − 1 − ln u)/(1 − u) du by tanh-sinh quadrature.
EvaluationResult reduce_1d_eval(const Complex& z, const PrecisionContext& ctx, const Real& tol);

/// Literal two-dimensional tanh-sinh quadrature; slow, meant for tol ≥ 1e−12.
EvaluationResult quad_2d_eval(const IntegralSpec& spec, const PrecisionContext& ctx, const Real& tol);

}  // namespace logzeta::integrals
