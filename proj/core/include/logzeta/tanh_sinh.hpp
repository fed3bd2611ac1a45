#pragma once

// Tanh-sinh (double exponential) quadrature on the open unit interval.
//
// With q(t) = π/2 · sinh(t) the map u(t) = (1 + tanh q)/2 sends ℝ onto (0, 1).
// Each node stores both u and 1 − u, computed independently, so integrands
// with endpoint singularities can be evaluated without cancellation. Nodes
// never touch 0 or 1.

#include <cstdint>
#include <memory>
#include <vector>

#include "logzeta/complex.hpp"

namespace logzeta::quad {

using mp::Complex;
using mp::Real;

struct Node {
  Real u;       // abscissa in (0, 1)
  Real comp;    // 1 − u
  Real weight;  // du/dt, without the step factor
};

/// All nodes t = k·2^{−level}, ordered by |t| (t = 0 first, then ± pairs).
/// Shared, immutable once built; cached per (level, precision).
std::shared_ptr<const std::vector<Node>> nodes(unsigned level, mp::Prec prec);

/// Step size 2^{−level}.
Real step(unsigned level, mp::Prec prec);

struct Outcome {
  Complex value;
  Real error;  // successive-level estimate plus the dropped-tail estimate; heuristic
  unsigned levels = 0;
  std::uint64_t evaluations = 0;
  bool converged = false;
};

struct Settings {
  unsigned min_level = 3;
  unsigned max_level = 12;
};

namespace detail {

// Consecutive negligible terms before a sweep in |t| stops.
inline constexpr int kQuietRun = 4;

// Error of S_L from the last two level differences. Once the differences shrink,
// double exponential convergence roughly squares the error per level, so
// Δ_L²/Δ_{L−1} is used; otherwise Δ_L itself.
inline Real level_error(const Real& diff, const Real& previous_diff) {
  const Real d = diff.rounded_up(64);
  if (previous_diff.is_zero() || !(d < previous_diff)) return d;
  const Real squared = (d * d / previous_diff).rounded_up(64);
  return squared < d ? squared : d;
}

}  // namespace detail

/// ∫_0^1 f(u) du where f is called as f(u, 1 − u) and returns a Complex.
template <typename F>
Outcome integrate(F&& f, mp::Prec prec, const Real& tol, const Settings& settings = {}) {
  Outcome out{Complex(prec), Real(64), 0, 0, false};
  const Real cutoff = tol.rounded(prec) * mp::pow2(-24, prec);
  Complex previous(prec);
  Real previous_diff(64);
  for (unsigned level = 0; level <= settings.max_level; ++level) {
    const auto table = nodes(level, prec);
    const Real h = step(level, prec);
    Complex sum(prec);
    Real dropped(prec);
    int quiet = 0;
    for (const Node& node : *table) {
      const Complex term = f(node.u, node.comp) * (node.weight * h);
      ++out.evaluations;
      const Real size = mp::abs(term);
      sum += term;
      if (size < cutoff) {
        dropped += size;
        if (++quiet >= detail::kQuietRun) break;
      } else {
        quiet = 0;
      }
    }
    out.levels = level + 1;
    out.value = sum;
    if (level > 0) {
      const Real diff = mp::abs(sum - previous).rounded_up(64);
      out.error = (detail::level_error(diff, previous_diff) + dropped).rounded_up(64);
      if (level >= settings.min_level && out.error < tol) {
        out.converged = true;
        return out;
      }
      previous_diff = diff;
    }
    previous = sum;
  }
  return out;
}

/// ∫_0^1 ∫_0^1 f(x, y) dx dy as a tensor product; f is called as
/// f(x, 1 − x, y, 1 − y).
template <typename F>
Outcome integrate_square(F&& f, mp::Prec prec, const Real& tol, const Settings& settings = {}) {
  Outcome out{Complex(prec), Real(64), 0, 0, false};
  const Real row_cutoff = tol.rounded(prec) * mp::pow2(-24, prec);
  Complex previous(prec);
  Real previous_diff(64);
  for (unsigned level = 0; level <= settings.max_level; ++level) {
    const auto table = nodes(level, prec);
    const Real h = step(level, prec);
    const Real h2 = h * h;
    Complex sum(prec);
    Real dropped(prec);
    int quiet_rows = 0;
    for (const Node& xn : *table) {
      // Every row is swept in full: a row near x = 1 has negligible terms around
      // y = 1/2 but can still carry the corner singularity at y → 1.
      Complex row(prec);
      const Real wx = xn.weight * h2;
      for (const Node& yn : *table) {
        row += f(xn.u, xn.comp, yn.u, yn.comp) * (wx * yn.weight);
      }
      out.evaluations += table->size();
      sum += row;
      const Real size = mp::abs(row);
      if (size < row_cutoff) {
        dropped += size;
        if (++quiet_rows >= detail::kQuietRun) break;
      } else {
        quiet_rows = 0;
      }
    }
    out.levels = level + 1;
    out.value = sum;
    if (level > 0) {
      const Real diff = mp::abs(sum - previous).rounded_up(64);
      out.error = (detail::level_error(diff, previous_diff) + dropped).rounded_up(64);
      if (level >= settings.min_level && out.error < tol) {
        out.converged = true;
        return out;
      }
      previous_diff = diff;
    }
    previous = sum;
  }
  return out;
}

}  // namespace logzeta::quad
