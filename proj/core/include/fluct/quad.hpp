#pragma once

// Quadrature engines for the smooth, decaying integrands that appear after
// rotating frequency integrals onto the imaginary axis, principal values
// across real-axis resonances, and Matsubara sums.

#include <cstdint>
#include <functional>

#include "fluct/core.hpp"

namespace fluct {

enum class QuadMethod { adaptive_subdivision, tanh_sinh, mapped_gauss };

struct QuadratureSpec {
  QuadMethod method = QuadMethod::tanh_sinh;
  double rel_tol = 1e-9;
  double abs_tol = 1e-14;
  std::int64_t max_evals = 1'000'000;
  /// Characteristic decay scale of the integrand on [0, inf); <= 0 lets
  /// the caller's default (or 1) apply.
  double decay_scale = 0.0;

  /// Throws DomainError unless rel_tol, abs_tol > 0 and max_evals >= 100.
  void validate() const;
  QuadratureSpec with_scale(double scale) const;
};

struct MatsubaraSpec {
  double rel_tol = 1e-9;
  std::int64_t n_max = 100'000;
  int consecutive_small = 3;

  void validate() const;
};

using Integrand = std::function<double(double)>;

/// int_0^inf f(x) dx, mapped to (0, 1) with x = s t / (1 - t), s = decay_scale.
/// Error estimate: twice the difference of the last two refinement levels,
/// floored at the roundoff level of the integrand.
EnergyResult integrate_semi_infinite(const Integrand& f, const QuadratureSpec& spec);

/// int_a^b f(x) dx on a finite interval.
EnergyResult integrate_interval(const Integrand& f, double a, double b, const QuadratureSpec& spec);

/// PV int_0^inf f(w) / (pole^2 - w^2) dw with f regular near the pole.
///
/// The window [pole - window, pole + window] is handled by subtracting the
/// pole value of f(w)/(pole + w), which leaves a removable singularity;
/// the PV of the subtracted constant vanishes on the symmetric window.
/// Requires 0 < window < pole.
EnergyResult integrate_pv(const Integrand& f, double pole, double window,
                          const QuadratureSpec& spec);

/// PV int_lo^hi f(w) / (pole - w) dw, lo < pole < hi, by the same subtraction
/// plus the analytic term f(pole) ln((pole - lo)/(hi - pole)).
EnergyResult integrate_pv_interval(const Integrand& f, double pole, double lo, double hi,
                                   const QuadratureSpec& spec);

/// T [ g(0)/2 + sum_{n>=1} g(2 pi n T) ].
///
/// Terms are summed until |term| < rel_tol |partial sum| for
/// consecutive_small terms in a row, or until n_max; the remainder is then
/// added as (1/2pi) int_{xi_N + pi T}^inf g, the midpoint-rule tail.
EnergyResult matsubara_sum(const Integrand& g, double temperature, const MatsubaraSpec& spec,
                           const QuadratureSpec& tail_spec = {});

}  // namespace fluct
