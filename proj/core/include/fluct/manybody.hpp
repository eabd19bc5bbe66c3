#pragma once

// N-atom dispersion free energy from the coupled-dipole log-determinant
//
//   E = (1/2pi) int_0^inf dxi log det[1 + A(ixi) T(ixi)],
//
// where A is the block-diagonal matrix of atomic polarizabilities and T the
// 3N x 3N interaction matrix with T_nm = -G(r_n, r_m) off the diagonal and
// zero self blocks. Single-atom self energies are not part of this module.

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "fluct/core.hpp"
#include "fluct/pairwise.hpp"
#include "fluct/polarizability.hpp"
#include "fluct/quad.hpp"

namespace fluct {

struct Site {
  Vector3 position = Vector3::Zero();
  PolarizabilityModel model = PolarizabilityModel::kramers_heisenberg({});
};

struct PairWarning {
  std::size_t i = 0;
  std::size_t j = 0;
  Validity validity;
};

class SystemGeometry {
 public:
  /// Throws DomainError for coincident sites or free-electron models.
  explicit SystemGeometry(std::vector<Site> sites);

  std::size_t size() const noexcept { return sites_.size(); }
  std::size_t dimension() const noexcept { return 3 * sites_.size(); }
  std::span<const Site> sites() const noexcept { return sites_; }
  const Site& operator[](std::size_t i) const { return sites_.at(i); }

  double min_separation() const;
  double max_separation() const;
  /// Smallest transition frequency over all sites with a non-empty model.
  double min_frequency() const;

  /// Pairs that fail validity_check (overlap regime).
  std::vector<PairWarning> overlapping_pairs() const;

 private:
  std::vector<Site> sites_;
};

enum class Retardation { retarded, nonretarded };

/// Interaction matrix on the imaginary axis.
struct InteractionMatrix {
  Eigen::MatrixXd t;
  double xi = 0.0;
};

/// Diagonal of the block-diagonal polarizability matrix, alpha_n(i xi) repeated
/// three times per site.
struct AlphaMatrix {
  Eigen::VectorXd diagonal;
  Eigen::MatrixXd dense() const { return diagonal.asDiagonal(); }
};

AlphaMatrix alpha_matrix(const SystemGeometry& geom, double xi);

/// T(i xi). With Retardation::nonretarded (or xi = 0) the blocks are the
/// electrostatic (I - 3 rr)/r^3.
InteractionMatrix build_T(const SystemGeometry& geom, double xi,
                          Retardation mode = Retardation::retarded);

/// T(omega) on the real axis, blocks -G(r_n, r_m, omega) in a medium of index n.
Eigen::MatrixXcd build_T_real_axis(const SystemGeometry& geom, double omega, double n_index = 1.0);

/// M = A (1 + T A)^{-1} = (1 + A T)^{-1} A, the polarizability of each atom
/// dressed by the fields of all the others. Throws UnboundedSpectrumError when
/// 1 + A T is singular.
Eigen::MatrixXd dressed_susceptibility(const SystemGeometry& geom, double xi,
                                       Retardation mode = Retardation::retarded);

/// log det[1 + A T] at i xi, from the eigenvalues of the symmetric matrix
/// A^{1/2} T A^{1/2}. Throws UnboundedSpectrumError if any 1 + eigenvalue <= 0.
double log_det_coupling(const SystemGeometry& geom, double xi,
                        Retardation mode = Retardation::retarded);

/// Zero-temperature interaction energy. N = 1 gives exactly zero.
EnergyResult free_energy_T0(const SystemGeometry& geom, const QuadratureSpec& quad = {},
                            Retardation mode = Retardation::retarded);

/// Finite-temperature free energy as the Matsubara sum
/// T [ L(0)/2 + sum_{n>=1} L(2 pi n T) ], L = log det[1 + A T].
EnergyResult free_energy_finiteT(const SystemGeometry& geom, double temperature,
                                 const MatsubaraSpec& tail = {},
                                 Retardation mode = Retardation::retarded,
                                 const QuadratureSpec& tail_quad = {});

/// The O(alpha^2) part, -(1/4pi) int sum_{n != m} a_n a_m Tr[G_nm G_mn], which
/// is the sum of pairwise energies.
EnergyResult second_order_energy(const SystemGeometry& geom, const QuadratureSpec& quad = {},
                                 Retardation mode = Retardation::retarded);

/// Zero-point energy shift of coupled identical oscillators,
/// sum_s w_s/2 - 3N w0/2 with w_s = w0 sqrt(1 + alpha t_k) over the eigenvalues
/// t_k of the electrostatic T. Requires identical single-resonance sites.
EnergyResult normal_mode_energy(const SystemGeometry& geom);

/// int_0^1 (dl/l) Tr[l^2 x (1 - l^2 x)^{-1}], which equals -Tr log(1 - x)/2
/// when the spectral radius of x is below one.
EnergyResult phf_lambda_integral(const Eigen::MatrixXd& x, const QuadratureSpec& quad = {});

/// int_0^1 (dl/l) l^power = 1/power, evaluated by the same quadrature.
EnergyResult coupling_constant_weight(int power, const QuadratureSpec& quad = {});

}  // namespace fluct
