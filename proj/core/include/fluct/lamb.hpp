#pragma once

// Single-atom radiative level shifts: the free-electron-subtracted, cutoff
// regulated ("Bethe log") shift, its modification inside a dilute dielectric,
// and the blackbody (finite temperature) correction.

#include <optional>
#include <string>

#include "fluct/core.hpp"
#include "fluct/polarizability.hpp"
#include "fluct/quad.hpp"

namespace fluct {

struct CutoffSpec {
  /// High-frequency cutoff; defaults to the electron rest energy m c^2 = c^2 a.u.
  double omega_max = constants::c2;
};

/// Warns when the cutoff is not at least 100 times the largest transition frequency.
std::optional<std::string> cutoff_warning(const PolarizabilityModel& model, const CutoffSpec& cutoff);

class RefractiveModel {
 public:
  static RefractiveModel vacuum();
  /// n(w) = 1 + 2 pi N alpha_host(w), for number density N (bohr^-3).
  static RefractiveModel dilute_medium(double number_density, PolarizabilityModel host);

  bool is_vacuum() const noexcept { return density_ == 0.0 || !host_; }
  double number_density() const noexcept { return density_; }
  const PolarizabilityModel& host() const;

  /// n(w) - 1 on the real axis, off resonance.
  double index_minus_one(double omega) const;
  /// Deviation of the static index from one, 2 pi N alpha_host(0).
  double static_deviation() const;
  /// True when |n - 1| < 0.1 at zero frequency.
  bool is_dilute() const;

 private:
  RefractiveModel(double density, std::optional<PolarizabilityModel> host)
      : density_(density), host_(std::move(host)) {}

  double density_ = 0.0;
  std::optional<PolarizabilityModel> host_;
};

/// -(2/(3 pi c^3)) sum_s w_s^2 d2_s ln((W + w_s)/w_s), W the cutoff.
double bethe_shift(const PolarizabilityModel& model, const CutoffSpec& cutoff = {});

/// Same quantity with int_0^W dw/(w + w_s) evaluated numerically.
EnergyResult bethe_shift_quadrature(const PolarizabilityModel& model, const CutoffSpec& cutoff = {},
                                    const QuadratureSpec& quad = {});

struct MediumShift {
  EnergyResult energy;
  double static_index_deviation = 0.0;
  bool dilute = true;
};

/// Shift in the dielectric minus the vacuum shift,
///   -(2/(3 pi c^3)) sum_s w_s^2 d2_s PV int_0^inf [n(w) - 1]/(w_s + w) dw,
/// with principal values across the host resonances.
MediumShift dielectric_shift_difference(const PolarizabilityModel& model,
                                        const RefractiveModel& medium,
                                        const QuadratureSpec& quad = {});

/// Blackbody correction at temperature T (Hartree),
///   -(4/(3 pi c^3)) sum_j d2_j w_j PV int_0^inf w^3 / [(e^{w/T} - 1)(w_j^2 - w^2)] dw.
EnergyResult thermal_shift(const PolarizabilityModel& model, double temperature,
                           const QuadratureSpec& quad = {});

}  // namespace fluct
