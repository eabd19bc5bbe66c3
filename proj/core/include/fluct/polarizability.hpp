#pragma once

// Isotropic ground-state polarizability models.
//
// The Kramers-Heisenberg form
//
//   alpha(omega) = (2/3) sum_s omega_s d2_s / (omega_s^2 - omega^2)
//
// is analytic in the upper half plane, so it can be evaluated just above
// the real axis (omega + i eta) or on the positive imaginary axis (i xi),
// where it is real, positive and decreasing.

#include <complex>
#include <span>
#include <vector>

namespace fluct {

/// One ground-to-excited transition: frequency omega (> 0) and squared
/// dipole matrix element |d|^2 (>= 0), both in atomic units.
struct Transition {
  double omega = 0.0;
  double d2 = 0.0;
};

class PolarizabilityModel {
 public:
  enum class Kind { kramers_heisenberg, single_resonance, free_electron };

  /// Sum over the given transitions. An empty list is allowed (alpha = 0).
  static PolarizabilityModel kramers_heisenberg(std::vector<Transition> transitions);
  /// One transition with d2 = (3/2) alpha_static omega0, so that alpha(0) = alpha_static.
  static PolarizabilityModel single_resonance(double alpha_static, double omega0);
  /// The omega_s -> 0 limit, alpha(omega) = -1/omega^2.
  static PolarizabilityModel free_electron();

  Kind kind() const noexcept { return kind_; }
  bool is_free_electron() const noexcept { return kind_ == Kind::free_electron; }

  /// Transition list (one entry for a single-resonance model). Throws
  /// DomainError for the free-electron model.
  std::span<const Transition> transitions() const;

  /// Smallest and largest transition frequency; zero for an empty list.
  double min_frequency() const;
  double max_frequency() const;

  /// Static polarizability alpha(0).
  double static_value() const;

 private:
  PolarizabilityModel(Kind kind, std::vector<Transition> transitions)
      : kind_(kind), transitions_(std::move(transitions)) {}

  Kind kind_;
  std::vector<Transition> transitions_;
};

/// alpha(i xi) for xi >= 0. The free-electron model has a pole at xi = 0.
double alpha_imag(const PolarizabilityModel& model, double xi);

/// alpha(omega + i eta) on the real axis with an explicit regulator eta > 0.
std::complex<double> alpha_real(const PolarizabilityModel& model, double omega, double eta);

/// The same rational function at an arbitrary complex frequency z.
std::complex<double> alpha_complex(const PolarizabilityModel& model, std::complex<double> z);

/// Thomas-Reiche-Kuhn sum (2/3) sum_s omega_s d2_s; the number of
/// electrons for a model that saturates the sum rule.
double oscillator_strength_sum(const PolarizabilityModel& model);

}  // namespace fluct
