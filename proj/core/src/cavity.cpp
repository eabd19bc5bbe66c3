#include "fluct/cavity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "fluct/errors.hpp"

namespace fluct {

namespace {

constexpr const char* kModule = "cavity";

}  // namespace

double dipole_dipole_V(const Vector3& d_a, const Vector3& d_b, const Vector3& rhat, double r) {
  if (!(r > 0.0)) throw DomainError(kModule, "separation must be positive");
  return -(d_a.dot(d_b) - 3.0 * d_a.dot(rhat) * d_b.dot(rhat)) / (r * r * r);
}

CavitySystem::CavitySystem(std::vector<TwoStateAtom> atoms, std::vector<Vector3> positions,
                           CavityMode mode)
    : atoms_(std::move(atoms)), positions_(std::move(positions)), mode_(std::move(mode)) {
  if (atoms_.empty()) throw DomainError(kModule, "need at least one atom");
  if (atoms_.size() > max_atoms) {
    throw DomainError(kModule, "at most " + std::to_string(max_atoms) + " atoms supported");
  }
  if (positions_.size() != atoms_.size()) {
    throw DomainError(kModule, "one position per atom required");
  }
  if (mode_.amplitudes.size() != atoms_.size()) {
    throw DomainError(kModule, "one mode amplitude per atom required");
  }
  if (!(mode_.omega > 0.0)) throw DomainError(kModule, "mode frequency must be positive");
  if (!is_unit(mode_.e_hat)) throw DomainError(kModule, "polarization must be a unit vector");
  for (const auto& a : atoms_) {
    if (!(a.omega > 0.0)) throw DomainError(kModule, "atomic frequency must be positive");
  }
  for (std::size_t n = 0; n < size(); ++n) {
    for (std::size_t m = n + 1; m < size(); ++m) {
      if ((positions_[n] - positions_[m]).norm() == 0.0) {
        throw DomainError(kModule, "atoms " + std::to_string(n) + " and " + std::to_string(m) +
                                       " share a position");
      }
    }
  }
}

bool CavitySystem::far_detuned() const noexcept {
  double w_max = 0.0;
  for (const auto& a : atoms_) w_max = std::max(w_max, a.omega);
  return mode_.omega / w_max > 10.0;
}

double CavitySystem::separation(std::size_t n, std::size_t m) const {
  return (positions_.at(m) - positions_.at(n)).norm();
}

Vector3 CavitySystem::rhat(std::size_t n, std::size_t m) const {
  return (positions_.at(m) - positions_.at(n)).normalized();
}

double CavitySystem::coupling(std::size_t n) const {
  return mode_.amplitudes.at(n) * atoms_.at(n).dipole.dot(mode_.e_hat) * std::sqrt(mode_.omega);
}

double CavitySystem::pair_interaction(std::size_t n, std::size_t m) const {
  if (!dipole_dipole_ || n == m) return 0.0;
  return dipole_dipole_V(atoms_.at(n).dipole, atoms_.at(m).dipole, rhat(n, m), separation(n, m));
}

CavitySystem CavitySystem::with_amplitude(std::size_t n, double amplitude) const {
  CavitySystem copy = *this;
  copy.mode_.amplitudes.at(n) = amplitude;
  return copy;
}

CavitySystem CavitySystem::without_dipole_dipole() const {
  CavitySystem copy = *this;
  copy.dipole_dipole_ = false;
  return copy;
}

PerturbativeShift perturbative_shift(const CavitySystem& system, const PerturbativeOptions& options) {
  if (system.size() != 2) throw DomainError(kModule, "perturbative shift is defined for two atoms");
  if (!system.far_detuned() && !options.force) {
    throw DomainError(kModule,
                      "perturbative formula outside validity: mode frequency must exceed ten "
                      "times the atomic frequencies");
  }
  const auto& mode = system.mode();
  const auto& a1 = system.atoms()[0];
  const auto& a2 = system.atoms()[1];
  const double A1 = mode.amplitudes[0];
  const double A2 = mode.amplitudes[1];
  const double p1 = a1.dipole.dot(mode.e_hat);
  const double p2 = a2.dipole.dot(mode.e_hat);
  const double w = mode.omega;

  PerturbativeShift out;
  out.self_1 = -A1 * A1 * p1 * p1 * w / (w + a1.omega);
  out.self_2 = -A2 * A2 * p2 * p2 * w / (w + a2.omega);
  if (!system.dipole_dipole_enabled()) return out;

  const Vector3 u = options.bracket == BracketAxis::separation ? system.rhat(0, 1) : mode.e_hat;
  const double r = system.separation(0, 1);
  const double bracket = a1.dipole.dot(a2.dipole) - 3.0 * a1.dipole.dot(u) * a2.dipole.dot(u);
  out.interaction = -(A1 * A2 / (2.0 * r * r * r)) * p1 * p2 * bracket / (a1.omega + a2.omega);
  return out;
}

double multilevel_self_shift(const std::vector<ProjectedTransition>& transitions, double amplitude,
                             double mode_omega) {
  if (!(mode_omega > 0.0)) throw DomainError(kModule, "mode frequency must be positive");
  double sum = 0.0;
  for (const auto& t : transitions) {
    if (!(t.omega > 0.0)) throw DomainError(kModule, "transition frequencies must be positive");
    sum += t.projected_d2 * mode_omega / (mode_omega + t.omega);
  }
  return -amplitude * amplitude * sum;
}

double ground_energy_truncated(const CavitySystem& system, int n_max) {
  if (n_max < 0) throw DomainError(kModule, "photon cutoff must be >= 0");
  const std::size_t n_atoms = system.size();
  const std::size_t photons = static_cast<std::size_t>(n_max) + 1;
  const std::size_t atom_states = std::size_t{1} << n_atoms;
  const std::size_t dim = atom_states * photons;
  const double w = system.mode().omega;

  std::vector<double> c(n_atoms);
  for (std::size_t n = 0; n < n_atoms; ++n) c[n] = system.coupling(n);

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim),
                                            static_cast<Eigen::Index>(dim));
  const auto index = [photons](std::size_t bits, std::size_t k) {
    return static_cast<Eigen::Index>(bits * photons + k);
  };

  for (std::size_t bits = 0; bits < atom_states; ++bits) {
    double atomic = 0.0;
    for (std::size_t n = 0; n < n_atoms; ++n) {
      if (bits >> n & 1U) atomic += system.atoms()[n].omega;
    }
    for (std::size_t k = 0; k < photons; ++k) {
      h(index(bits, k), index(bits, k)) = atomic + w * static_cast<double>(k);
      // -C_n (a + a+) sx_n
      if (k + 1 < photons) {
        const double amp = std::sqrt(static_cast<double>(k + 1));
        for (std::size_t n = 0; n < n_atoms; ++n) {
          if (c[n] == 0.0) continue;
          const std::size_t flipped = bits ^ (std::size_t{1} << n);
          h(index(flipped, k + 1), index(bits, k)) -= c[n] * amp;
          h(index(bits, k), index(flipped, k + 1)) -= c[n] * amp;
        }
      }
      // V_nm sx_n sx_m
      for (std::size_t n = 0; n < n_atoms; ++n) {
        for (std::size_t m = n + 1; m < n_atoms; ++m) {
          const double v = system.pair_interaction(n, m);
          if (v == 0.0) continue;
          const std::size_t flipped = bits ^ (std::size_t{1} << n) ^ (std::size_t{1} << m);
          h(index(flipped, k), index(bits, k)) += v;
        }
      }
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError(kModule, "diagonalization failed");
  }
  return solver.eigenvalues()(0);
}

double exact_ground_energy(const CavitySystem& system, int n_max) {
  if (n_max < 4) throw DomainError(kModule, "photon cutoff must be >= 4");
  const double coarse = ground_energy_truncated(system, n_max);
  const double fine = ground_energy_truncated(system, n_max + 4);
  if (!(std::abs(fine - coarse) < 1e-10)) {
    throw ConvergenceError(kModule, "ground energy not converged in photon cutoff: change " +
                                        format_number(std::abs(fine - coarse)) + " from n_max " +
                                        std::to_string(n_max) + " to " + std::to_string(n_max + 4));
  }
  return fine;
}

double interaction_extract(const CavitySystem& system, int n_max) {
  if (system.size() != 2) throw DomainError(kModule, "interaction extraction is defined for two atoms");
  if (n_max < 4) throw DomainError(kModule, "photon cutoff must be >= 4");
  const double A1 = system.mode().amplitudes[0];
  if (A1 == 0.0 || system.coupling(0) == 0.0 || system.coupling(1) == 0.0 ||
      system.pair_interaction(0, 1) == 0.0) {
    return 0.0;
  }
  const double plus = exact_ground_energy(system, n_max);
  const double minus = exact_ground_energy(system.with_amplitude(0, -A1), n_max);
  return 0.5 * (plus - minus);
}

}  // namespace fluct
