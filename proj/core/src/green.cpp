#include "fluct/green.hpp"

#include <cmath>

#include "fluct/errors.hpp"

namespace fluct {

namespace {

constexpr const char* kModule = "green";

struct Separation {
  double r;
  Vector3 rhat;
};

Separation separation(const Vector3& rn, const Vector3& rm) {
  const Vector3 d = rn - rm;
  const double r = d.norm();
  if (!(r > 0.0)) throw DomainError(kModule, "coincident points: use im_coincidence");
  return {r, d / r};
}

Matrix3 outer(const Vector3& rhat) { return rhat * rhat.transpose(); }

// cos x / x^2 - sin x / x^3, which cancels to -1/3 + x^2/30 - ... for small x.
double longitudinal_imag(double x) {
  if (x < 0.1) {
    const double x2 = x * x;
    return -1.0 / 3.0 + x2 * (1.0 / 30.0 + x2 * (-1.0 / 840.0 + x2 / 45360.0));
  }
  return std::cos(x) / (x * x) - std::sin(x) / (x * x * x);
}

double sinc(double x) {
  if (x < 1e-4) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

}  // namespace

FTensor f_tensor(double x, const Vector3& rhat) {
  if (!(x > 0.0)) throw DomainError(kModule, "f_tensor requires x > 0");
  if (!is_unit(rhat)) throw DomainError(kModule, "f_tensor requires a unit direction");
  const Matrix3 rr = outer(rhat);
  const Matrix3 id = Matrix3::Identity();
  return {(id - rr) * sinc(x) + (id - 3.0 * rr) * longitudinal_imag(x), x};
}

GreenBlock dyadic_green(const Vector3& rn, const Vector3& rm, double omega, double n_index) {
  if (!(omega > 0.0)) throw DomainError(kModule, "dyadic_green requires omega > 0");
  if (!(n_index >= 1.0)) throw DomainError(kModule, "refractive index must be >= 1");
  const auto [r, rhat] = separation(rn, rm);
  const double k = n_index * omega / constants::c;
  const double x = k * r;
  const double prefactor = k * omega * omega / constants::c2;
  const Matrix3 rr = outer(rhat);
  const Matrix3 id = Matrix3::Identity();
  const Matrix3 transverse = id - rr;
  const Matrix3 longitudinal = id - 3.0 * rr;

  // e^{ix}/x and e^{ix}(i/x^2 - 1/x^3), real and imaginary parts separately.
  const double c = std::cos(x);
  const double s = std::sin(x);
  const double re_a = c / x;
  const double re_b = -s / (x * x) - c / (x * x * x);

  GreenBlock out;
  const Matrix3 re = prefactor * (transverse * re_a + longitudinal * re_b);
  const Matrix3 im = prefactor * f_tensor(x, rhat).f;
  out.g.real() = re;
  out.g.imag() = im;
  out.frequency = omega;
  out.separation = r;
  return out;
}

Matrix3 green_imag_axis(const Vector3& rn, const Vector3& rm, double xi) {
  if (!(xi >= 0.0)) throw DomainError(kModule, "imaginary frequency must be >= 0");
  const auto [r, rhat] = separation(rn, rm);
  const double y = xi * r / constants::c;
  const Matrix3 rr = outer(rhat);
  const Matrix3 id = Matrix3::Identity();
  const double envelope = std::exp(-y) / (r * r * r);
  return -envelope * ((id - rr) * (y * y) + (id - 3.0 * rr) * (1.0 + y));
}

GreenBlock dyadic_green_imag(const Vector3& rn, const Vector3& rm, double xi) {
  if (!(xi > 0.0)) throw DomainError(kModule, "dyadic_green_imag requires xi > 0");
  GreenBlock out;
  out.g.real() = green_imag_axis(rn, rm, xi);
  out.g.imag().setZero();
  out.frequency = {0.0, xi};
  out.separation = (rn - rm).norm();
  return out;
}

Matrix3c green_kernel(std::complex<double> omega, std::complex<double> k, double r,
                      const Vector3& rhat) {
  using namespace std::complex_literals;
  const std::complex<double> kr = k * r;
  const Matrix3 rr = outer(rhat);
  const Matrix3c transverse = (Matrix3::Identity() - rr).cast<std::complex<double>>();
  const Matrix3c longitudinal = (Matrix3::Identity() - 3.0 * rr).cast<std::complex<double>>();
  const std::complex<double> prefactor = k * omega * omega / constants::c2 * std::exp(1i * kr);
  return prefactor * (transverse / kr + longitudinal * (1i / (kr * kr) - 1.0 / (kr * kr * kr)));
}

double im_coincidence(double omega, double n_index) {
  if (!(omega > 0.0)) throw DomainError(kModule, "im_coincidence requires omega > 0");
  return 2.0 * n_index * omega * omega * omega / constants::c3;
}

}  // namespace fluct
