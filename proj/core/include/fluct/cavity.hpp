#pragma once

// Two-state atoms coupled to a single cavity mode and to each other through
// the static dipole-dipole interaction. No rotating-wave approximation.
//
//   H = sum_n w_n s+_n s_n + w a+a - sum_n C_n (a + a+) sx_n + sum_{n<m} V_nm sx_n sx_m
//   C_n = A_n (d_n . e) sqrt(w)

#include <cstddef>
#include <vector>

#include "fluct/core.hpp"

namespace fluct {

struct TwoStateAtom {
  double omega = 0.0;
  Vector3 dipole = Vector3::Zero();
};

struct CavityMode {
  double omega = 0.0;
  Vector3 e_hat = Vector3::UnitX();
  std::vector<double> amplitudes;
};

/// -(1/r^3)[d_a.d_b - 3 (d_a.rhat)(d_b.rhat)]
double dipole_dipole_V(const Vector3& d_a, const Vector3& d_b, const Vector3& rhat, double r);

class CavitySystem {
 public:
  static constexpr std::size_t max_atoms = 4;

  CavitySystem(std::vector<TwoStateAtom> atoms, std::vector<Vector3> positions, CavityMode mode);

  std::size_t size() const noexcept { return atoms_.size(); }
  const std::vector<TwoStateAtom>& atoms() const noexcept { return atoms_; }
  const std::vector<Vector3>& positions() const noexcept { return positions_; }
  const CavityMode& mode() const noexcept { return mode_; }

  /// w / max(w_n) > 10.
  bool far_detuned() const noexcept;
  bool dipole_dipole_enabled() const noexcept { return dipole_dipole_; }

  double separation(std::size_t n, std::size_t m) const;
  Vector3 rhat(std::size_t n, std::size_t m) const;
  /// C_n
  double coupling(std::size_t n) const;
  /// V_nm, zero when the dipole-dipole term is switched off.
  double pair_interaction(std::size_t n, std::size_t m) const;

  CavitySystem with_amplitude(std::size_t n, double amplitude) const;
  CavitySystem without_dipole_dipole() const;

 private:
  std::vector<TwoStateAtom> atoms_;
  std::vector<Vector3> positions_;
  CavityMode mode_;
  bool dipole_dipole_ = true;
};

/// Which unit vector enters the 3(d1.u)(d2.u) part of the interaction bracket.
enum class BracketAxis { separation, polarization };

struct PerturbativeOptions {
  bool force = false;
  BracketAxis bracket = BracketAxis::separation;
};

struct PerturbativeShift {
  double self_1 = 0.0;
  double self_2 = 0.0;
  double interaction = 0.0;
  double total() const noexcept { return self_1 + self_2 + interaction; }
};

/// self_n = -A_n^2 (d_n.e)^2 w/(w + w_n);
/// interaction = -(A1 A2 / 2r^3)(d1.e)(d2.e)[d1.d2 - 3(d1.u)(d2.u)]/(w1 + w2).
PerturbativeShift perturbative_shift(const CavitySystem& system, const PerturbativeOptions& options = {});

struct ProjectedTransition {
  double omega = 0.0;
  double projected_d2 = 0.0;  // |(d.e)_sg|^2
};

/// -A^2 sum_s |(d.e)_sg|^2 w/(w + w_sg)
double multilevel_self_shift(const std::vector<ProjectedTransition>& transitions, double amplitude,
                             double mode_omega);

/// Lowest eigenvalue of H in the truncated space {g,e}^N x {0..n_max photons}.
/// Basis index = atom bits * (n_max + 1) + photon number.
double ground_energy_truncated(const CavitySystem& system, int n_max);

/// Ground-state shift with a convergence check against n_max + 4 (< 1e-10).
/// Returns the n_max + 4 value.
double exact_ground_energy(const CavitySystem& system, int n_max = 12);

/// Part of the exact two-atom shift odd in A_1: [E(A1) - E(-A1)] / 2.
/// Self terms and pure V terms are even in A_1 and drop out; the remainder is
/// the cavity-mediated cross term ~ A1 A2 V.
double interaction_extract(const CavitySystem& system, int n_max = 12);

}  // namespace fluct
