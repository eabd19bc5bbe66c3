#pragma once

// Retarded dyadic Green tensor of a point electric dipole in a homogeneous
// medium of real refractive index n:
//
//   G_ij(r_n, r_m, w) = k w^2/c^2 [ (d_ij - r_i r_j) / kr
//                       + (d_ij - 3 r_i r_j)(i/(kr)^2 - 1/(kr)^3) ] e^{ikr},   k = n w / c
//
// with r = r_n - r_m. G E-field convention: E(r_n) = G p(r_m).

#include <complex>

#include <Eigen/Core>

#include "fluct/core.hpp"

namespace fluct {

using Matrix3c = Eigen::Matrix3cd;

struct GreenBlock {
  Matrix3c g = Matrix3c::Zero();
  std::complex<double> frequency{};
  double separation = 0.0;
};

struct FTensor {
  Matrix3 f = Matrix3::Zero();
  double x = 0.0;
};

/// Vacuum field-correlation tensor
///   F_ij(x) = (d_ij - r_i r_j) sin x / x + (d_ij - 3 r_i r_j)(cos x / x^2 - sin x / x^3).
/// Uses a Taylor series for small x; F -> (2/3) I as x -> 0.
FTensor f_tensor(double x, const Vector3& rhat);

/// Green tensor for real frequency omega > 0 and refractive index n >= 1.
GreenBlock dyadic_green(const Vector3& rn, const Vector3& rm, double omega, double n_index = 1.0);

/// Vacuum Green tensor at omega = i xi, xi > 0. All entries are real:
///   G = -[(d - rr) y^2 + (d - 3rr)(1 + y)] e^{-y} / r^3,  y = xi r / c.
GreenBlock dyadic_green_imag(const Vector3& rn, const Vector3& rm, double xi);

/// Real 3x3 form of dyadic_green_imag; also valid at xi = 0, where it is the
/// electrostatic dipole tensor (3 rr - I)/r^3.
Matrix3 green_imag_axis(const Vector3& rn, const Vector3& rm, double xi);

/// Direct evaluation of the defining expression at complex frequency and
/// wavenumber. Shared reference kernel for the real and imaginary axis forms;
/// it loses accuracy for |kr| << 1 and should not be used there.
Matrix3c green_kernel(std::complex<double> omega, std::complex<double> k, double r,
                      const Vector3& rhat);

/// Im of the coincidence limit lim_{r'->r} G(r, r', w), as the trace
/// coefficient 2 n w^3 / c^3. Each diagonal component carries one third of
/// it, so sum_i Im G_ii = 2 n w^3/c^3. The divergent real part is never formed.
double im_coincidence(double omega, double n_index = 1.0);

}  // namespace fluct
