#pragma once

// Two-atom dispersion energies from the imaginary-frequency integral and
// its nonretarded (London) and retarded (Casimir-Polder) limits.

#include "fluct/core.hpp"
#include "fluct/polarizability.hpp"
#include "fluct/quad.hpp"

namespace fluct {

struct PairSpec {
  PolarizabilityModel model_a;
  PolarizabilityModel model_b;
  double r = 0.0;  ///< separation in bohr, > 0
};

/// Full retarded two-atom energy
///   E = -(1/(pi r^6)) int_0^inf dxi a(ixi) b(ixi) (y^4 + 2y^3 + 5y^2 + 6y + 3) e^{-2y},
/// y = xi r / c. Default decay scale: min(smallest transition, c / 2r).
EnergyResult vdw_energy(const PairSpec& pair, const QuadratureSpec& quad = {});

/// Nonretarded energy -(3/(pi r^6)) int_0^inf a(ixi) b(ixi) dxi by quadrature.
EnergyResult london_energy(const PairSpec& pair, const QuadratureSpec& quad = {});

/// Closed form of london_energy: -(2/(3 r^6)) sum_m sum_n d2_m d2_n / (w_m + w_n).
double london_energy_closed_form(const PairSpec& pair);

/// Large-separation limit -23 c a(0) b(0) / (4 pi r^7).
double casimir_polder_asymptote(double alpha_a0, double alpha_b0, double r);

struct Validity {
  bool ok = true;
  double ratio = 0.0;  ///< a(0) b(0) / r^6
};

/// ok iff a(0) b(0) / r^6 < 1; at or above one the atomic wavefunctions
/// overlap and the point-dipole picture breaks down.
Validity validity_check(const PairSpec& pair);

}  // namespace fluct
