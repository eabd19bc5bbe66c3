#include "fluct/manybody.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "fluct/errors.hpp"
#include "fluct/green.hpp"

namespace fluct {

namespace {

constexpr const char* kModule = "manybody";

EnergyResult scaled(EnergyResult r, double factor) {
  r.value *= factor;
  r.error_estimate *= std::abs(factor);
  return r;
}

double default_scale(const SystemGeometry& geom, Retardation mode) {
  double scale = geom.min_frequency();
  if (mode == Retardation::retarded) {
    scale = std::min(scale, constants::c / (2.0 * geom.max_separation()));
  }
  return scale;
}

bool has_polarizable_pair(const SystemGeometry& geom) {
  int count = 0;
  for (const auto& s : geom.sites()) {
    if (!s.model.transitions().empty()) ++count;
  }
  return count >= 2;
}

}  // namespace

SystemGeometry::SystemGeometry(std::vector<Site> sites) : sites_(std::move(sites)) {
  for (std::size_t i = 0; i < sites_.size(); ++i) {
    if (sites_[i].model.is_free_electron()) {
      throw DomainError(kModule, "site " + std::to_string(i) + " has a free-electron model");
    }
    if (!sites_[i].position.allFinite()) {
      throw DomainError(kModule, "site " + std::to_string(i) + " has a non-finite position");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (!((sites_[i].position - sites_[j].position).norm() > 0.0)) {
        throw DomainError(kModule, "sites " + std::to_string(j) + " and " + std::to_string(i) +
                                       " coincide");
      }
    }
  }
}

double SystemGeometry::min_separation() const {
  double r = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      r = std::min(r, (sites_[i].position - sites_[j].position).norm());
  return r;
}

double SystemGeometry::max_separation() const {
  double r = 0.0;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      r = std::max(r, (sites_[i].position - sites_[j].position).norm());
  return r;
}

double SystemGeometry::min_frequency() const {
  double w = std::numeric_limits<double>::infinity();
  for (const auto& s : sites_) {
    if (!s.model.transitions().empty()) w = std::min(w, s.model.min_frequency());
  }
  return std::isfinite(w) ? w : 1.0;
}

std::vector<PairWarning> SystemGeometry::overlapping_pairs() const {
  std::vector<PairWarning> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      const PairSpec pair{sites_[i].model, sites_[j].model,
                          (sites_[i].position - sites_[j].position).norm()};
      const auto v = validity_check(pair);
      if (!v.ok) out.push_back({i, j, v});
    }
  }
  return out;
}

AlphaMatrix alpha_matrix(const SystemGeometry& geom, double xi) {
  AlphaMatrix a;
  a.diagonal.resize(static_cast<Eigen::Index>(geom.dimension()));
  for (std::size_t n = 0; n < geom.size(); ++n) {
    a.diagonal.segment<3>(3 * static_cast<Eigen::Index>(n))
        .setConstant(alpha_imag(geom[n].model, xi));
  }
  return a;
}

InteractionMatrix build_T(const SystemGeometry& geom, double xi, Retardation mode) {
  if (!(xi >= 0.0)) throw DomainError(kModule, "imaginary frequency must be >= 0");
  const auto dim = static_cast<Eigen::Index>(geom.dimension());
  InteractionMatrix out{Eigen::MatrixXd::Zero(dim, dim), xi};
  const double xi_eff = mode == Retardation::nonretarded ? 0.0 : xi;
  for (std::size_t n = 0; n < geom.size(); ++n) {
    for (std::size_t m = n + 1; m < geom.size(); ++m) {
      const Matrix3 block = -green_imag_axis(geom[n].position, geom[m].position, xi_eff);
      const auto in = 3 * static_cast<Eigen::Index>(n);
      const auto im = 3 * static_cast<Eigen::Index>(m);
      out.t.block<3, 3>(in, im) = block;
      out.t.block<3, 3>(im, in) = block.transpose();
    }
  }
  return out;
}

Eigen::MatrixXcd build_T_real_axis(const SystemGeometry& geom, double omega, double n_index) {
  const auto dim = static_cast<Eigen::Index>(geom.dimension());
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t n = 0; n < geom.size(); ++n) {
    for (std::size_t m = n + 1; m < geom.size(); ++m) {
      const Matrix3c block = -dyadic_green(geom[n].position, geom[m].position, omega, n_index).g;
      const auto in = 3 * static_cast<Eigen::Index>(n);
      const auto im = 3 * static_cast<Eigen::Index>(m);
      t.block<3, 3>(in, im) = block;
      t.block<3, 3>(im, in) = block.transpose();
    }
  }
  return t;
}

Eigen::MatrixXd dressed_susceptibility(const SystemGeometry& geom, double xi, Retardation mode) {
  const auto a = alpha_matrix(geom, xi);
  const auto t = build_T(geom, xi, mode).t;
  const auto dim = static_cast<Eigen::Index>(geom.dimension());
  const Eigen::MatrixXd coupling = Eigen::MatrixXd::Identity(dim, dim) + a.diagonal.asDiagonal() * t;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(coupling);
  if (!lu.isInvertible()) {
    throw UnboundedSpectrumError(kModule, "1 + A T is singular at xi = " + format_number(xi));
  }
  return lu.solve(Eigen::MatrixXd(a.diagonal.asDiagonal()));
}

double log_det_coupling(const SystemGeometry& geom, double xi, Retardation mode) {
  const auto a = alpha_matrix(geom, xi);
  const auto t = build_T(geom, xi, mode).t;
  const Eigen::VectorXd root = a.diagonal.cwiseSqrt();
  const Eigen::MatrixXd s = root.asDiagonal() * t * root.asDiagonal();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s, Eigen::EigenvaluesOnly);
  double sum = 0.0;
  for (Eigen::Index k = 0; k < eig.eigenvalues().size(); ++k) {
    const double lambda = eig.eigenvalues()[k];
    if (!(1.0 + lambda > 0.0)) {
      throw UnboundedSpectrumError(
          kModule, "strong-coupling/overlap regime: 1 + A T has eigenvalue " +
                       format_number(1.0 + lambda) + " at xi = " + format_number(xi));
    }
    sum += std::log1p(lambda);
  }
  return sum;
}

EnergyResult free_energy_T0(const SystemGeometry& geom, const QuadratureSpec& quad,
                            Retardation mode) {
  if (!has_polarizable_pair(geom)) return {};
  const auto integrand = [&](double xi) { return log_det_coupling(geom, xi, mode); };
  const auto res = integrate_semi_infinite(integrand, quad.with_scale(default_scale(geom, mode)));
  return scaled(res, 1.0 / (2.0 * std::numbers::pi));
}

EnergyResult free_energy_finiteT(const SystemGeometry& geom, double temperature,
                                 const MatsubaraSpec& tail, Retardation mode,
                                 const QuadratureSpec& tail_quad) {
  if (!(temperature > 0.0)) throw DomainError(kModule, "temperature must be positive");
  if (!has_polarizable_pair(geom)) return {};
  const auto summand = [&](double xi) { return log_det_coupling(geom, xi, mode); };
  return matsubara_sum(summand, temperature, tail, tail_quad);
}

EnergyResult second_order_energy(const SystemGeometry& geom, const QuadratureSpec& quad,
                                 Retardation mode) {
  if (!has_polarizable_pair(geom)) return {};
  const auto integrand = [&](double xi) {
    const double xi_eff = mode == Retardation::nonretarded ? 0.0 : xi;
    double sum = 0.0;
    for (std::size_t n = 0; n < geom.size(); ++n) {
      const double an = alpha_imag(geom[n].model, xi);
      if (an == 0.0) continue;
      for (std::size_t m = n + 1; m < geom.size(); ++m) {
        const Matrix3 g = green_imag_axis(geom[n].position, geom[m].position, xi_eff);
        // G_mn = G_nm^T, so Tr[G_nm G_mn] is the squared Frobenius norm.
        sum += an * alpha_imag(geom[m].model, xi) * g.squaredNorm();
      }
    }
    return sum;
  };
  const auto res = integrate_semi_infinite(integrand, quad.with_scale(default_scale(geom, mode)));
  // Ordered pairs n != m double the sum over n < m: -(1/4pi) * 2.
  return scaled(res, -1.0 / (2.0 * std::numbers::pi));
}

EnergyResult normal_mode_energy(const SystemGeometry& geom) {
  if (geom.size() == 0) return {};
  const auto& first = geom[0].model;
  if (first.kind() != PolarizabilityModel::Kind::single_resonance) {
    throw DomainError(kModule, "normal-mode energy needs identical single-resonance atoms");
  }
  const Transition ref = first.transitions().front();
  for (const auto& s : geom.sites()) {
    if (s.model.kind() != PolarizabilityModel::Kind::single_resonance ||
        s.model.transitions().front().omega != ref.omega ||
        s.model.transitions().front().d2 != ref.d2) {
      throw DomainError(kModule, "normal-mode energy needs identical single-resonance atoms");
    }
  }
  const double omega0 = ref.omega;
  const double alpha = 2.0 / 3.0 * ref.d2 / omega0;

  const auto t = build_T(geom, 0.0, Retardation::nonretarded).t;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(t, Eigen::EigenvaluesOnly);
  double sum = 0.0;
  double magnitude = 0.0;
  for (Eigen::Index k = 0; k < eig.eigenvalues().size(); ++k) {
    const double x = alpha * eig.eigenvalues()[k];
    if (!(1.0 + x > 0.0)) {
      throw UnboundedSpectrumError(kModule, "Hamiltonian unbounded below: 1 + alpha t = " +
                                                format_number(1.0 + x));
    }
    // sqrt(1 + x) - 1 without cancellation.
    sum += x / (std::sqrt(1.0 + x) + 1.0);
    magnitude += std::abs(x);
  }
  EnergyResult out;
  out.value = 0.5 * omega0 * sum;
  out.error_estimate = 0.5 * omega0 * magnitude * 16.0 * std::numeric_limits<double>::epsilon() *
                       static_cast<double>(geom.dimension());
  out.evaluations = 1;
  return out;
}

EnergyResult phf_lambda_integral(const Eigen::MatrixXd& x, const QuadratureSpec& quad) {
  if (x.rows() != x.cols()) throw DomainError(kModule, "lambda integral needs a square matrix");
  if (x.size() == 0) return {};
  Eigen::EigenSolver<Eigen::MatrixXd> eig(x, false);
  const double radius = eig.eigenvalues().cwiseAbs().maxCoeff();
  if (!(radius < 1.0)) {
    throw DomainError(kModule, "spectral radius " + format_number(radius) + " is not below 1");
  }
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(x.rows(), x.cols());
  // (1/l) Tr[l^2 x (1 - l^2 x)^{-1}] = l Tr[(1 - l^2 x)^{-1} x]
  const auto integrand = [&](double lambda) {
    const Eigen::MatrixXd y = (id - lambda * lambda * x).partialPivLu().solve(x);
    return lambda * y.trace();
  };
  return integrate_interval(integrand, 0.0, 1.0, quad);
}

EnergyResult coupling_constant_weight(int power, const QuadratureSpec& quad) {
  if (power < 1) throw DomainError(kModule, "coupling power must be >= 1");
  return integrate_interval([power](double l) { return std::pow(l, power - 1); }, 0.0, 1.0, quad);
}

}  // namespace fluct
