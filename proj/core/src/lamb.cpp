#include "fluct/lamb.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "fluct/errors.hpp"

namespace fluct {

namespace {

constexpr const char* kModule = "lamb";

void require_bound(const PolarizabilityModel& model) {
  if (model.is_free_electron()) {
    throw DomainError(kModule, "level shifts need a Kramers-Heisenberg model");
  }
}

void require_cutoff(const CutoffSpec& cutoff) {
  if (!(cutoff.omega_max >= 0.0) || !std::isfinite(cutoff.omega_max)) {
    throw DomainError(kModule, "cutoff must be finite and non-negative");
  }
}

constexpr double kBethePrefactor = 2.0 / (3.0 * std::numbers::pi * constants::c3);

}  // namespace

std::optional<std::string> cutoff_warning(const PolarizabilityModel& model,
                                          const CutoffSpec& cutoff) {
  require_bound(model);
  const double w = model.max_frequency();
  if (w > 0.0 && cutoff.omega_max / w <= 100.0) {
    return "cutoff " + format_number(cutoff.omega_max) +
           " is not much larger than the highest transition " + format_number(w);
  }
  return std::nullopt;
}

RefractiveModel RefractiveModel::vacuum() { return {0.0, std::nullopt}; }

RefractiveModel RefractiveModel::dilute_medium(double number_density, PolarizabilityModel host) {
  if (!(number_density >= 0.0)) throw DomainError(kModule, "number density must be >= 0");
  return {number_density, std::move(host)};
}

const PolarizabilityModel& RefractiveModel::host() const {
  if (!host_) throw DomainError(kModule, "vacuum has no host model");
  return *host_;
}

double RefractiveModel::index_minus_one(double omega) const {
  if (is_vacuum()) return 0.0;
  return 2.0 * std::numbers::pi * density_ * alpha_complex(*host_, omega).real();
}

double RefractiveModel::static_deviation() const {
  if (is_vacuum()) return 0.0;
  if (host_->is_free_electron()) return std::numeric_limits<double>::infinity();
  return 2.0 * std::numbers::pi * density_ * host_->static_value();
}

bool RefractiveModel::is_dilute() const { return std::abs(static_deviation()) < 0.1; }

double bethe_shift(const PolarizabilityModel& model, const CutoffSpec& cutoff) {
  require_bound(model);
  require_cutoff(cutoff);
  double sum = 0.0;
  for (const auto& t : model.transitions()) {
    sum += t.omega * t.omega * t.d2 * std::log1p(cutoff.omega_max / t.omega);
  }
  return -kBethePrefactor * sum;
}

EnergyResult bethe_shift_quadrature(const PolarizabilityModel& model, const CutoffSpec& cutoff,
                                    const QuadratureSpec& quad) {
  require_bound(model);
  require_cutoff(cutoff);
  EnergyResult out;
  if (cutoff.omega_max == 0.0) return out;
  for (const auto& t : model.transitions()) {
    const double ws = t.omega;
    const auto piece =
        integrate_interval([ws](double w) { return 1.0 / (w + ws); }, 0.0, cutoff.omega_max, quad);
    const double weight = kBethePrefactor * ws * ws * t.d2;
    out.value -= weight * piece.value;
    out.error_estimate += weight * piece.error_estimate;
    out.evaluations += piece.evaluations;
  }
  return out;
}

MediumShift dielectric_shift_difference(const PolarizabilityModel& model,
                                        const RefractiveModel& medium, const QuadratureSpec& quad) {
  require_bound(model);
  MediumShift out;
  if (medium.is_vacuum()) return out;
  const auto& host = medium.host();
  if (host.is_free_electron()) {
    throw DomainError(kModule,
                      "host index must fall off as 1/w^2 with a finite static limit; the "
                      "free-electron host diverges at w = 0");
  }
  out.static_index_deviation = medium.static_deviation();
  out.dilute = medium.is_dilute();

  const double density_factor = 2.0 * std::numbers::pi * medium.number_density() * (2.0 / 3.0);
  for (const auto& guest : model.transitions()) {
    const double ws = guest.omega;
    for (const auto& h : host.transitions()) {
      // PV int_0^inf dw / ((ws + w)(wh^2 - w^2))
      const auto pv = integrate_pv([ws](double w) { return 1.0 / (ws + w); }, h.omega,
                                   0.5 * h.omega, quad.with_scale(h.omega));
      const double weight =
          kBethePrefactor * ws * ws * guest.d2 * density_factor * h.omega * h.d2;
      out.energy.value -= weight * pv.value;
      out.energy.error_estimate += std::abs(weight) * pv.error_estimate;
      out.energy.evaluations += pv.evaluations;
    }
  }
  return out;
}

EnergyResult thermal_shift(const PolarizabilityModel& model, double temperature,
                           const QuadratureSpec& quad) {
  require_bound(model);
  if (!(temperature > 0.0)) throw DomainError(kModule, "temperature must be positive");
  const auto bose_weighted = [temperature](double w) {
    if (w == 0.0) return 0.0;
    return w * w * w / std::expm1(w / temperature);
  };
  EnergyResult out;
  const double prefactor = 4.0 / (3.0 * std::numbers::pi * constants::c3);
  for (const auto& t : model.transitions()) {
    const auto pv = integrate_pv(bose_weighted, t.omega, 0.5 * t.omega, quad.with_scale(temperature));
    const double weight = prefactor * t.d2 * t.omega;
    out.value -= weight * pv.value;
    out.error_estimate += weight * pv.error_estimate;
    out.evaluations += pv.evaluations;
  }
  return out;
}

}  // namespace fluct
