#include <doctest.h>

#include <cmath>

#include "fluct/errors.hpp"
#include "fluct/polarizability.hpp"
#include "oracles.hpp"

using namespace fluct;

TEST_CASE("single resonance static and half-width values") {
  const auto m = PolarizabilityModel::single_resonance(4.0, 0.5);
  CHECK(alpha_imag(m, 0.0) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(alpha_imag(m, 0.5) == doctest::Approx(2.0).epsilon(1e-15));
  REQUIRE(m.transitions().size() == 1);
  CHECK(m.transitions()[0].d2 == doctest::Approx(1.5 * 4.0 * 0.5));
  CHECK(m.static_value() == doctest::Approx(4.0));
}

TEST_CASE("free electron on both axes") {
  const auto fe = PolarizabilityModel::free_electron();
  CHECK(alpha_imag(fe, 2.0) == doctest::Approx(0.25));
  CHECK_THROWS_AS(alpha_imag(fe, 0.0), DomainError);
  const auto a = alpha_real(fe, 2.0, 1e-9);
  CHECK(a.real() == doctest::Approx(-0.25).epsilon(1e-8));
  CHECK_THROWS_AS(oscillator_strength_sum(fe), DomainError);
}

TEST_CASE("real axis values") {
  const auto m = PolarizabilityModel::single_resonance(4.0, 0.5);
  const auto at_zero = alpha_real(m, 0.0, 1e-8);
  CHECK(at_zero.real() == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(std::abs(at_zero.imag()) < 1e-12);

  // direct evaluation of (2/3) w d2 / (w^2 - z^2) at z = w0 + i eta
  const double eta = 1e-3;
  const std::complex<double> z(0.5, eta);
  const auto expected = (2.0 / 3.0) * 0.5 * 3.0 / (0.25 - z * z);
  const auto got = alpha_real(m, 0.5, eta);
  CHECK(std::abs(got - expected) <= 1e-12 * std::abs(expected));
  CHECK(got.imag() > 0.0);
  CHECK_THROWS_AS(alpha_real(m, 0.5, 0.0), DomainError);
  CHECK_THROWS_AS(alpha_real(m, 0.5, -1.0), DomainError);
}

TEST_CASE("passivity on the positive real axis") {
  const auto m = PolarizabilityModel::kramers_heisenberg({{0.375, 2.0}, {0.5, 1.0}, {1.2, 0.3}});
  for (double w = 0.01; w < 3.0; w += 0.037) CHECK(alpha_real(m, w, 1e-4).imag() >= 0.0);
}

TEST_CASE("oscillator strength sums") {
  CHECK(oscillator_strength_sum(PolarizabilityModel::kramers_heisenberg({{0.5, 3.0}})) ==
        doctest::Approx(1.0));
  CHECK(oscillator_strength_sum(PolarizabilityModel::kramers_heisenberg({})) == 0.0);
  CHECK(oscillator_strength_sum(PolarizabilityModel::kramers_heisenberg({{0.375, 2.0}, {0.5, 1.0}})) ==
        doctest::Approx(oracle::toy_oscillator_sum).epsilon(1e-15));
}

TEST_CASE("imaginary axis monotone, convex beyond resonances, TRK tail") {
  const auto m = PolarizabilityModel::kramers_heisenberg({{0.375, 2.0}, {0.5, 1.0}});
  double prev = alpha_imag(m, 0.0);
  for (double xi = 0.01; xi < 5.0; xi += 0.01) {
    const double a = alpha_imag(m, xi);
    CHECK(a <= prev);
    CHECK(a > 0.0);
    prev = a;
  }
  const double h = 0.01;
  for (double xi = 0.6; xi < 5.0; xi += 0.1) {
    CHECK(alpha_imag(m, xi + h) + alpha_imag(m, xi - h) - 2 * alpha_imag(m, xi) >= 0.0);
  }
  const double xi = 100.0 * m.max_frequency();
  CHECK(xi * xi * alpha_imag(m, xi) == doctest::Approx(oscillator_strength_sum(m)).epsilon(0.01));
}

TEST_CASE("real and imaginary axes share one rational function") {
  const auto m = PolarizabilityModel::kramers_heisenberg({{0.375, 2.0}, {0.5, 1.0}});
  for (double xi : {0.0, 0.1, 0.7, 3.0}) {
    const auto z = alpha_complex(m, std::complex<double>(0.0, xi));
    CHECK(std::abs(z.real() - alpha_imag(m, xi)) <= 1e-12 * alpha_imag(m, xi));
    CHECK(std::abs(z.imag()) <= 1e-15);
  }
}

TEST_CASE("invalid models") {
  CHECK_THROWS_AS(PolarizabilityModel::kramers_heisenberg({{0.0, 1.0}}), DomainError);
  CHECK_THROWS_AS(PolarizabilityModel::kramers_heisenberg({{0.5, -1.0}}), DomainError);
  CHECK_THROWS_AS(PolarizabilityModel::single_resonance(1.0, -0.5), DomainError);
  CHECK_THROWS_AS(alpha_imag(PolarizabilityModel::single_resonance(1.0, 0.5), -1.0), DomainError);
}
