#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fluct/errors.hpp"
#include "fluct/green.hpp"

using namespace fluct;
using constants::c;

namespace {

Matrix3 static_tensor(const Vector3& rn, const Vector3& rm) {
  const Vector3 d = rm - rn;
  const double r = d.norm();
  const Vector3 u = d / r;
  return (3.0 * u * u.transpose() - Matrix3::Identity()) / (r * r * r);
}

}  // namespace

TEST_CASE("F tensor small argument") {
  const Vector3 u = Vector3(1, 2, -0.5).normalized();
  const auto f = f_tensor(1e-4, u);
  CHECK((f.f - (2.0 / 3.0) * Matrix3::Identity()).cwiseAbs().maxCoeff() < 1e-7);
  CHECK(f.f.isApprox(f.f.transpose(), 0.0));
}

TEST_CASE("F tensor at x = pi along z") {
  const double pi = std::numbers::pi;
  const auto f = f_tensor(pi, Vector3::UnitZ());
  Matrix3 expected = Matrix3::Zero();
  expected.diagonal() << -1.0 / (pi * pi), -1.0 / (pi * pi), 2.0 / (pi * pi);
  CHECK((f.f - expected).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("F tensor large argument is transverse") {
  const double x = 1e6 + 0.3;
  const Vector3 u = Vector3::UnitZ();
  const auto f = f_tensor(x, u);
  const Matrix3 transverse = (Matrix3::Identity() - u * u.transpose()) * std::sin(x) / x;
  CHECK((f.f - transverse).cwiseAbs().maxCoeff() < 2.0 / (x * x));
}

TEST_CASE("F tensor series and direct forms meet smoothly") {
  const Vector3 u = Vector3(0.3, -0.4, 0.5).normalized();
  const auto below = f_tensor(0.1 * (1 - 1e-12), u);
  const auto above = f_tensor(0.1 * (1 + 1e-12), u);
  CHECK((below.f - above.f).cwiseAbs().maxCoeff() < 1e-13);
  CHECK_THROWS_AS(f_tensor(0.0, u), DomainError);
  CHECK_THROWS_AS(f_tensor(1.0, Vector3(0, 0, 2)), DomainError);
}

TEST_CASE("dyadic Green static limit") {
  const Vector3 rn(0.1, -0.2, 0.3);
  const Vector3 rm = rn + Vector3(0.6, 0.0, 0.8);
  const auto g = dyadic_green(rn, rm, 1e-6);
  const Matrix3 s = static_tensor(rn, rm);
  CHECK((g.g.real() - s).norm() <= 1e-9 * s.norm());
}

TEST_CASE("dyadic Green reciprocity is exact") {
  const Vector3 rn(0.0, 1.0, 2.0);
  const Vector3 rm(3.0, -1.0, 0.5);
  const auto a = dyadic_green(rn, rm, 0.7);
  const auto b = dyadic_green(rm, rn, 0.7);
  CHECK(a.g == b.g.transpose());
  CHECK(a.g == a.g.transpose());
}

TEST_CASE("dyadic Green far field is transverse 1/kr") {
  const Vector3 rn = Vector3::Zero();
  const Vector3 rm(0, 0, 5000.0);
  const double w = 3.0;
  const double k = w / c;
  const double kr = k * 5000.0;
  const auto g = dyadic_green(rn, rm, w);
  const double lead = k * k * k / kr;
  // transverse entries ~ k^3/kr, longitudinal entry down by 1/kr
  CHECK(std::abs(g.g(0, 0)) == doctest::Approx(lead).epsilon(2.0 / kr));
  CHECK(std::abs(g.g(2, 2)) < 3.0 * lead / kr);
}

TEST_CASE("Im G equals k w^2/c^2 F") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> pos(-5, 5), freq(0.01, 3.0);
  for (int i = 0; i < 50; ++i) {
    const Vector3 rn(pos(rng), pos(rng), pos(rng));
    const Vector3 rm(pos(rng), pos(rng), pos(rng));
    const double w = freq(rng);
    const auto g = dyadic_green(rn, rm, w);
    const Vector3 d = rm - rn;
    const auto f = f_tensor(w * d.norm() / c, d.normalized());
    const Matrix3 expected = (w * w * w / (c * c * c)) * f.f;
    CHECK((g.g.imag() - expected).cwiseAbs().maxCoeff() <= 1e-12 * expected.cwiseAbs().maxCoeff());
  }
}

TEST_CASE("imaginary axis Green is real and decays") {
  const Vector3 rn = Vector3::Zero();
  const Vector3 rm(0, 0, 2.0);
  const auto g = dyadic_green_imag(rn, rm, 0.3);
  CHECK(g.g.imag().cwiseAbs().maxCoeff() == 0.0);
  const Matrix3 s = static_tensor(rn, rm);
  CHECK((green_imag_axis(rn, rm, 1e-9) - s).norm() <= 1e-9 * s.norm());
  CHECK(green_imag_axis(rn, rm, 0.0) == green_imag_axis(rn, rm, 0.0).transpose());
  // transverse entry at y = 5 and 10: [y^2 + y + 1] e^{-y} / r^3
  const double r = 2.0;
  const auto transverse = [&](double y) { return green_imag_axis(rn, rm, y * c / r)(0, 0); };
  const auto model = [&](double y) { return -(y * y + y + 1.0) * std::exp(-y) / (r * r * r); };
  CHECK(transverse(5.0) == doctest::Approx(model(5.0)).epsilon(1e-12));
  CHECK(transverse(10.0) / transverse(5.0) == doctest::Approx(model(10.0) / model(5.0)).epsilon(1e-12));
  CHECK_THROWS_AS(dyadic_green_imag(rn, rm, 0.0), DomainError);
}

TEST_CASE("real and imaginary axes share the kernel") {
  const Vector3 u = Vector3(1, 1, 1).normalized();
  const double r = 3.0, xi = 0.2;
  const auto k = green_kernel({0.0, xi}, {0.0, xi / c}, r, u);
  const Matrix3 direct = green_imag_axis(Vector3::Zero(), r * u, xi);
  CHECK((k.real() - direct).cwiseAbs().maxCoeff() <= 1e-12 * direct.cwiseAbs().maxCoeff());
  CHECK(k.imag().cwiseAbs().maxCoeff() <= 1e-12 * direct.cwiseAbs().maxCoeff());
}

TEST_CASE("coincident points rejected") {
  const Vector3 p(1, 2, 3);
  CHECK_THROWS_AS(dyadic_green(p, p, 1.0), DomainError);
  CHECK_THROWS_AS(green_imag_axis(p, p, 1.0), DomainError);
  CHECK_THROWS_AS(dyadic_green(p, Vector3::Zero(), 0.0), DomainError);
}

TEST_CASE("coincidence imaginary part") {
  CHECK(im_coincidence(1.0) == doctest::Approx(2.0 / (c * c * c)).epsilon(1e-15));
  CHECK(im_coincidence(2.0) == doctest::Approx(16.0 / (c * c * c)).epsilon(1e-15));
  CHECK(im_coincidence(1.0, 1.5) == doctest::Approx(3.0 / (c * c * c)).epsilon(1e-15));
}

TEST_CASE("coincidence value is the trace of the short-distance limit") {
  const Vector3 u = Vector3(1, 2, 2) / 3.0;
  for (double w : {0.1, 1.0, 5.0}) {
    const double r = 1e-4 * c / w;
    const double trace = dyadic_green(Vector3::Zero(), r * u, w).g.imag().trace();
    CHECK(trace == doctest::Approx(im_coincidence(w)).epsilon(1e-7));
    const auto diag = dyadic_green(Vector3::Zero(), r * u, w).g.imag().diagonal();
    CHECK(diag.sum() / 3.0 == doctest::Approx(im_coincidence(w) / 3.0).epsilon(1e-7));
  }
}
