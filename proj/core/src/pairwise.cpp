#include "fluct/pairwise.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fluct/errors.hpp"

namespace fluct {

namespace {

constexpr const char* kModule = "pairwise";

void check_pair(const PairSpec& pair) {
  if (!(pair.r > 0.0) || !std::isfinite(pair.r)) {
    throw DomainError(kModule, "separation must be positive");
  }
  if (pair.model_a.is_free_electron() || pair.model_b.is_free_electron()) {
    throw DomainError(kModule, "pair energies need bound (Kramers-Heisenberg) models");
  }
}

bool either_empty(const PairSpec& pair) {
  return pair.model_a.transitions().empty() || pair.model_b.transitions().empty();
}

double smallest_frequency(const PairSpec& pair) {
  return std::min(pair.model_a.min_frequency(), pair.model_b.min_frequency());
}

}  // namespace

EnergyResult vdw_energy(const PairSpec& pair, const QuadratureSpec& quad) {
  check_pair(pair);
  if (either_empty(pair)) return {};
  const double r = pair.r;
  const auto integrand = [&](double xi) {
    const double y = xi * r / constants::c;
    const double poly = (((y + 2.0) * y + 5.0) * y + 6.0) * y + 3.0;
    return alpha_imag(pair.model_a, xi) * alpha_imag(pair.model_b, xi) * poly * std::exp(-2.0 * y);
  };
  const double scale = std::min(smallest_frequency(pair), constants::c / (2.0 * r));
  EnergyResult res = integrate_semi_infinite(integrand, quad.with_scale(scale));
  const double prefactor = -1.0 / (std::numbers::pi * std::pow(r, 6));
  res.value *= prefactor;
  res.error_estimate *= -prefactor;
  return res;
}

EnergyResult london_energy(const PairSpec& pair, const QuadratureSpec& quad) {
  check_pair(pair);
  if (either_empty(pair)) return {};
  const auto integrand = [&](double xi) {
    return alpha_imag(pair.model_a, xi) * alpha_imag(pair.model_b, xi);
  };
  EnergyResult res = integrate_semi_infinite(integrand, quad.with_scale(smallest_frequency(pair)));
  const double prefactor = -3.0 / (std::numbers::pi * std::pow(pair.r, 6));
  res.value *= prefactor;
  res.error_estimate *= -prefactor;
  return res;
}

double london_energy_closed_form(const PairSpec& pair) {
  check_pair(pair);
  double sum = 0.0;
  for (const auto& m : pair.model_a.transitions()) {
    for (const auto& n : pair.model_b.transitions()) {
      sum += m.d2 * n.d2 / (m.omega + n.omega);
    }
  }
  return -2.0 / 3.0 * sum / std::pow(pair.r, 6);
}

double casimir_polder_asymptote(double alpha_a0, double alpha_b0, double r) {
  if (!(r > 0.0)) throw DomainError(kModule, "separation must be positive");
  return -23.0 * constants::c * alpha_a0 * alpha_b0 / (4.0 * std::numbers::pi * std::pow(r, 7));
}

Validity validity_check(const PairSpec& pair) {
  check_pair(pair);
  const double ratio =
      pair.model_a.static_value() * pair.model_b.static_value() / std::pow(pair.r, 6);
  return {ratio < 1.0, ratio};
}

}  // namespace fluct
