#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fluct/errors.hpp"
#include "fluct/pairwise.hpp"
#include "oracles.hpp"

using namespace fluct;
using constants::c;

namespace {

PairSpec identical(double alpha, double w0, double r) {
  const auto m = PolarizabilityModel::single_resonance(alpha, w0);
  return {m, m, r};
}

}  // namespace

TEST_CASE("London closed form for identical single resonances") {
  const auto p = identical(4.0, 0.5, 3.0);
  const double expected = -3.0 * 0.5 * 16.0 / (4.0 * std::pow(3.0, 6));
  CHECK(london_energy_closed_form(p) == doctest::Approx(expected).epsilon(1e-14));
  const auto q = london_energy(p);
  CHECK(std::abs(q.value - expected) <= 1e-8 * std::abs(expected));
}

TEST_CASE("London with one transition each") {
  const PairSpec p{PolarizabilityModel::kramers_heisenberg({{0.4, 2.0}}),
                   PolarizabilityModel::kramers_heisenberg({{0.9, 0.7}}), 2.5};
  const double expected = -(2.0 / (3.0 * std::pow(2.5, 6))) * 2.0 * 0.7 / (0.4 + 0.9);
  CHECK(london_energy_closed_form(p) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(london_energy(p).value == doctest::Approx(expected).epsilon(1e-8));
}

TEST_CASE("London quadrature matches closed form for multi-transition models") {
  const PairSpec p{PolarizabilityModel::kramers_heisenberg({{0.375, 2.0}, {0.5, 1.0}, {2.0, 0.2}}),
                   PolarizabilityModel::kramers_heisenberg({{0.1, 5.0}, {0.8, 0.4}}), 4.0};
  const double closed = london_energy_closed_form(p);
  CHECK(std::abs(london_energy(p).value - closed) <= 10 * 1e-9 * std::abs(closed));
}

TEST_CASE("empty partner gives zero") {
  const PairSpec p{PolarizabilityModel::single_resonance(4.0, 0.5),
                   PolarizabilityModel::kramers_heisenberg({}), 2.0};
  CHECK(london_energy(p).value == 0.0);
  CHECK(london_energy_closed_form(p) == 0.0);
  CHECK(vdw_energy(p).value == 0.0);
}

TEST_CASE("free electron rejected") {
  const PairSpec p{PolarizabilityModel::free_electron(), PolarizabilityModel::single_resonance(4.0, 0.5), 2.0};
  CHECK_THROWS_AS(vdw_energy(p), DomainError);
  CHECK_THROWS_AS(london_energy(p), DomainError);
  CHECK_THROWS_AS(vdw_energy(identical(4.0, 0.5, 0.0)), DomainError);
}

TEST_CASE("vdW reduces to London at short range") {
  const auto p = identical(4.0, 0.5, 1.0);
  const double ratio = vdw_energy(p).value / london_energy_closed_form(p);
  CHECK(ratio == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("vdW reduces to Casimir-Polder at long range") {
  const auto p = identical(4.0, 0.5, 1e4);
  const double ratio = vdw_energy(p).value / casimir_polder_asymptote(4.0, 4.0, 1e4);
  CHECK(ratio == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("vdW regression at intermediate range") {
  const auto e = vdw_energy(identical(4.0, 0.5, 50.0));
  CHECK(std::abs(e.value - oracle::vdw_sr_r50) <= 1e-9 * std::abs(oracle::vdw_sr_r50));
  CHECK(e.error_estimate <= 1e-9 * std::abs(e.value));
  CHECK(e.value < 0.0);
}

TEST_CASE("vdW is symmetric and decreasing in magnitude") {
  const auto a = PolarizabilityModel::kramers_heisenberg({{0.375, 2.0}, {0.5, 1.0}});
  const auto b = PolarizabilityModel::single_resonance(9.0, 0.3);
  CHECK(vdw_energy({a, b, 7.0}).value == vdw_energy({b, a, 7.0}).value);
  double prev = std::abs(vdw_energy({a, b, 1.0}).value);
  for (double r = 1.5; r < 3e4; r *= 1.5) {
    const double e = std::abs(vdw_energy({a, b, r}).value);
    CHECK(e < prev);
    prev = e;
  }
}

TEST_CASE("Casimir-Polder asymptote") {
  CHECK(casimir_polder_asymptote(1, 1, 1) == doctest::Approx(-23.0 * c / (4 * std::numbers::pi)).epsilon(1e-15));
  CHECK(casimir_polder_asymptote(2, 3, 2) == doctest::Approx(casimir_polder_asymptote(2, 3, 1) / 128).epsilon(1e-15));
  CHECK(casimir_polder_asymptote(0, 3, 2) == 0.0);
}

TEST_CASE("validity check") {
  const auto one = identical(1.0, 0.5, 2.0);
  CHECK(validity_check(one).ok);
  CHECK(validity_check(one).ratio == doctest::Approx(1.0 / 64));
  const auto four = identical(4.0, 0.5, 1.0);
  CHECK_FALSE(validity_check(four).ok);
  CHECK(validity_check(four).ratio == doctest::Approx(16.0));
  CHECK_FALSE(validity_check(identical(1.0, 0.5, 1.0)).ok);
}
