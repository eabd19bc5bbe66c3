#include "fluct/polarizability.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fluct/errors.hpp"

namespace fluct {

namespace {
constexpr const char* kModule = "polarizability";
}

PolarizabilityModel PolarizabilityModel::kramers_heisenberg(std::vector<Transition> transitions) {
  for (const auto& t : transitions) {
    if (!(t.omega > 0.0) || !std::isfinite(t.omega)) {
      throw DomainError(kModule, "transition frequency must be positive, got " +
                                     format_number(t.omega));
    }
    if (!(t.d2 >= 0.0) || !std::isfinite(t.d2)) {
      throw DomainError(kModule, "squared dipole moment must be non-negative");
    }
  }
  return {Kind::kramers_heisenberg, std::move(transitions)};
}

PolarizabilityModel PolarizabilityModel::single_resonance(double alpha_static, double omega0) {
  if (!(omega0 > 0.0)) throw DomainError(kModule, "resonance frequency must be positive");
  if (!(alpha_static >= 0.0)) throw DomainError(kModule, "static polarizability must be >= 0");
  return {Kind::single_resonance, {Transition{omega0, 1.5 * alpha_static * omega0}}};
}

PolarizabilityModel PolarizabilityModel::free_electron() { return {Kind::free_electron, {}}; }

std::span<const Transition> PolarizabilityModel::transitions() const {
  if (is_free_electron()) {
    throw DomainError(kModule, "the free-electron model has no transition list");
  }
  return transitions_;
}

double PolarizabilityModel::min_frequency() const {
  if (transitions_.empty()) return 0.0;
  return std::min_element(transitions_.begin(), transitions_.end(),
                          [](const auto& a, const auto& b) { return a.omega < b.omega; })
      ->omega;
}

double PolarizabilityModel::max_frequency() const {
  if (transitions_.empty()) return 0.0;
  return std::max_element(transitions_.begin(), transitions_.end(),
                          [](const auto& a, const auto& b) { return a.omega < b.omega; })
      ->omega;
}

double PolarizabilityModel::static_value() const { return alpha_imag(*this, 0.0); }

double alpha_imag(const PolarizabilityModel& model, double xi) {
  if (!(xi >= 0.0)) throw DomainError(kModule, "imaginary frequency must be >= 0");
  if (model.is_free_electron()) {
    if (xi == 0.0) throw DomainError(kModule, "free-electron polarizability has a pole at xi = 0");
    return 1.0 / (xi * xi);
  }
  double sum = 0.0;
  const double xi2 = xi * xi;
  for (const auto& t : model.transitions()) {
    sum += t.omega * t.d2 / (t.omega * t.omega + xi2);
  }
  return (2.0 / 3.0) * sum;
}

std::complex<double> alpha_complex(const PolarizabilityModel& model, std::complex<double> z) {
  if (model.is_free_electron()) {
    if (z == 0.0) throw DomainError(kModule, "free-electron polarizability has a pole at 0");
    return -1.0 / (z * z);
  }
  std::complex<double> sum = 0.0;
  const auto z2 = z * z;
  for (const auto& t : model.transitions()) {
    sum += t.omega * t.d2 / (t.omega * t.omega - z2);
  }
  return (2.0 / 3.0) * sum;
}

std::complex<double> alpha_real(const PolarizabilityModel& model, double omega, double eta) {
  if (!(eta > 0.0)) throw DomainError(kModule, "regulator eta must be positive");
  return alpha_complex(model, {omega, eta});
}

double oscillator_strength_sum(const PolarizabilityModel& model) {
  if (model.is_free_electron()) {
    throw DomainError(kModule, "oscillator strength sum is not defined for a free electron");
  }
  double sum = 0.0;
  for (const auto& t : model.transitions()) sum += t.omega * t.d2;
  return (2.0 / 3.0) * sum;
}

}  // namespace fluct
