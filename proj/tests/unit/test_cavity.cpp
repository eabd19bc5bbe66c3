#include <doctest.h>

#include <cmath>

#include "fluct/cavity.hpp"
#include "fluct/errors.hpp"

using namespace fluct;

namespace {

// Far-detuned, weakly coupled pair: dipoles and polarization along x,
// separation along z.
CavitySystem pair(double r, double a1 = 0.05, double a2 = 0.05, double d = 1.0) {
  return CavitySystem({{0.1, Vector3(d, 0, 0)}, {0.12, Vector3(d, 0, 0)}},
                      {Vector3::Zero(), Vector3(0, 0, r)},
                      {2.0, Vector3::UnitX(), {a1, a2}});
}

// Cross term obtained from second-order perturbation theory on the full
// two-state Hamiltonian, -4 W A1 A2 (d1.e)(d2.e)/(w1 + w2), W = -V.
double cross_term_reference(const CavitySystem& s) {
  const double p1 = s.atoms()[0].dipole.dot(s.mode().e_hat);
  const double p2 = s.atoms()[1].dipole.dot(s.mode().e_hat);
  const double w = -s.pair_interaction(0, 1);
  return -4.0 * w * s.mode().amplitudes[0] * s.mode().amplitudes[1] * p1 * p2 /
         (s.atoms()[0].omega + s.atoms()[1].omega);
}

}  // namespace

TEST_CASE("dipole-dipole potential") {
  const double r = 2.0;
  CHECK(dipole_dipole_V(Vector3::UnitZ(), Vector3::UnitZ(), Vector3::UnitZ(), r) == doctest::Approx(2.0 / 8));
  CHECK(dipole_dipole_V(Vector3::UnitX(), Vector3::UnitX(), Vector3::UnitZ(), r) == doctest::Approx(-1.0 / 8));
  CHECK(dipole_dipole_V(Vector3::UnitX(), Vector3::UnitY(), Vector3::UnitZ(), r) == 0.0);
  CHECK_THROWS_AS(dipole_dipole_V(Vector3::UnitX(), Vector3::UnitX(), Vector3::UnitZ(), 0.0), DomainError);
}

TEST_CASE("system validation") {
  CHECK_THROWS_AS(CavitySystem({{0.1, Vector3::UnitX()}}, {Vector3::Zero(), Vector3::UnitZ()},
                               {2.0, Vector3::UnitX(), {0.1}}),
                  DomainError);
  CHECK_THROWS_AS(CavitySystem({{0.1, Vector3::UnitX()}, {0.1, Vector3::UnitX()}},
                               {Vector3::Zero(), Vector3::Zero()}, {2.0, Vector3::UnitX(), {0.1, 0.1}}),
                  DomainError);
  CHECK_THROWS_AS(CavitySystem({{0.1, Vector3::UnitX()}}, {Vector3::Zero()}, {2.0, Vector3(1, 1, 0), {0.1}}),
                  DomainError);
  CHECK_THROWS_AS(CavitySystem({{0.1, Vector3::UnitX()}}, {Vector3::Zero()}, {2.0, Vector3::UnitX(), {0.1, 0.2}}),
                  DomainError);
  CHECK_THROWS_AS(CavitySystem({{0.0, Vector3::UnitX()}}, {Vector3::Zero()}, {2.0, Vector3::UnitX(), {0.1}}),
                  DomainError);
  CHECK(pair(5.0).far_detuned());
  CHECK(pair(5.0).coupling(0) == doctest::Approx(0.05 * std::sqrt(2.0)));
}

TEST_CASE("perturbative shift formulas") {
  const auto s = pair(5.0);
  const auto p = perturbative_shift(s);
  CHECK(p.self_1 == doctest::Approx(-0.0025 * 2.0 / 2.1));
  CHECK(p.self_2 == doctest::Approx(-0.0025 * 2.0 / 2.12));
  // d1, d2 along e = x, rhat = z
  CHECK(p.interaction == doctest::Approx(-0.05 * 0.05 / (2 * 125.0) / 0.22));
  CHECK(p.total() == doctest::Approx(p.self_1 + p.self_2 + p.interaction));
}

TEST_CASE("node switches off the interaction") {
  const auto p = perturbative_shift(pair(5.0, 0.0, 0.05));
  CHECK(p.self_1 == 0.0);
  CHECK(p.interaction == 0.0);
  CHECK(p.self_2 < 0.0);
}

TEST_CASE("bracket along the polarization") {
  const auto s = pair(5.0);
  PerturbativeOptions o;
  o.bracket = BracketAxis::polarization;
  // [d1.d2 - 3 (d1.e)(d2.e)] = -2 for d1 = d2 = e
  CHECK(perturbative_shift(s, o).interaction == doctest::Approx(-2.0 * perturbative_shift(s).interaction));
}

TEST_CASE("perturbative regime check") {
  const CavitySystem near({{0.5, Vector3::UnitX()}, {0.5, Vector3::UnitX()}}, {Vector3::Zero(), Vector3(0, 0, 5)},
                          {2.0, Vector3::UnitX(), {0.05, 0.05}});
  CHECK_FALSE(near.far_detuned());
  CHECK_THROWS_AS(perturbative_shift(near), DomainError);
  PerturbativeOptions o;
  o.force = true;
  CHECK_NOTHROW(perturbative_shift(near, o));
}

TEST_CASE("perturbative parity and amplitude linearity") {
  const auto s = pair(6.0);
  const CavitySystem flipped({{0.1, Vector3(-1, 0, 0)}, {0.12, Vector3(-1, 0, 0)}}, s.positions(), s.mode());
  const auto a = perturbative_shift(s);
  const auto b = perturbative_shift(flipped);
  CHECK(a.self_1 == b.self_1);
  CHECK(a.self_2 == b.self_2);
  CHECK(a.interaction == b.interaction);
  CHECK(perturbative_shift(s.with_amplitude(0, 0.1)).interaction == doctest::Approx(2 * a.interaction).epsilon(1e-15));
}

TEST_CASE("multilevel self shift") {
  const auto s = pair(5.0);
  CHECK(multilevel_self_shift({{0.1, 1.0}}, 0.05, 2.0) == doctest::Approx(perturbative_shift(s).self_1));
  CHECK(multilevel_self_shift({{0.1, 1.0}, {0.3, 0.5}}, 0.05, 1e12) ==
        doctest::Approx(-0.0025 * 1.5).epsilon(1e-10));
  CHECK(multilevel_self_shift({{0.1, 0.5}, {0.1, 0.5}}, 0.05, 2.0) ==
        doctest::Approx(multilevel_self_shift({{0.1, 1.0}}, 0.05, 2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(multilevel_self_shift({{0.0, 1.0}}, 0.05, 2.0), DomainError);
}

TEST_CASE("exact ground energy without couplings is zero") {
  const CavitySystem s({{0.1, Vector3::UnitX()}, {0.12, Vector3::UnitY()}}, {Vector3::Zero(), Vector3(0, 0, 5)},
                       {2.0, Vector3::UnitZ(), {0.05, 0.05}});
  // dipoles orthogonal to each other and to e: C = 0 and V = 0
  CHECK(exact_ground_energy(s) == 0.0);
  CHECK_THROWS_AS(exact_ground_energy(s, 3), DomainError);
}

TEST_CASE("pure dipole-dipole second order shift") {
  const auto s = pair(5.0, 0.0, 0.0);
  const double v = s.pair_interaction(0, 1);
  const double expected = -v * v / 0.22;
  CHECK(exact_ground_energy(s) == doctest::Approx(expected).epsilon(1e-3));
}

TEST_CASE("exact shift matches perturbation theory in weak coupling") {
  const auto residual = [](double a) {
    const auto s = pair(1e3, a, a);
    const double exact = exact_ground_energy(s);
    return std::make_pair(exact, perturbative_shift(s).total());
  };
  const auto [e1, p1] = residual(0.05);
  CHECK(std::abs(e1 - p1) < 0.05 * std::abs(e1));
  const auto [e2, p2] = residual(0.025);
  CHECK(std::abs(e2 - p2) / std::abs(e2) < 0.3 * std::abs(e1 - p1) / std::abs(e1));
}

TEST_CASE("exact energy does not increase with photon cutoff") {
  const auto s = pair(4.0, 0.2, 0.15);
  double prev = ground_energy_truncated(s, 0);
  for (int n = 1; n <= 14; ++n) {
    const double e = ground_energy_truncated(s, n);
    CHECK(e <= prev + 1e-15);
    prev = e;
  }
}

TEST_CASE("strong coupling does not converge at a small cutoff") {
  const auto s = pair(5.0, 2.0, 2.0, 1.0);
  CHECK_THROWS_AS(exact_ground_energy(s, 4), ConvergenceError);
}

TEST_CASE("interaction extraction structural zeros") {
  CHECK(interaction_extract(pair(5.0, 0.0, 0.05)) == 0.0);
  CHECK(interaction_extract(pair(5.0).without_dipole_dipole()) == 0.0);
}

TEST_CASE("extracted interaction is the cavity cross term") {
  const auto s = pair(5.0);
  const double extracted = interaction_extract(s);
  CHECK(extracted == doctest::Approx(cross_term_reference(s)).epsilon(0.03));
  // the closed form carries 1/8 of this cross term
  CHECK(perturbative_shift(s).interaction / extracted == doctest::Approx(0.125).epsilon(0.03));
}

TEST_CASE("extracted interaction falls as r^-3") {
  const double near = interaction_extract(pair(10.0));
  const double far = interaction_extract(pair(20.0));
  CHECK(far / near == doctest::Approx(0.125).epsilon(0.02));
}

TEST_CASE("self-term residual scales as coupling^4") {
  const auto residual = [](double a) {
    const auto s = pair(10.0, a, a).without_dipole_dipole();
    const auto p = perturbative_shift(s);
    return exact_ground_energy(s) - (p.self_1 + p.self_2);
  };
  const double exponent = std::log(residual(0.05) / residual(0.025)) / std::log(2.0);
  CHECK(exponent == doctest::Approx(4.0).epsilon(0.125));
}

TEST_CASE("more atoms") {
  const CavitySystem three({{0.1, Vector3::UnitX()}, {0.12, Vector3::UnitX()}, {0.11, Vector3::UnitX()}},
                           {Vector3::Zero(), Vector3(0, 0, 5), Vector3(0, 5, 0)},
                           {2.0, Vector3::UnitX(), {0.05, 0.05, 0.05}});
  CHECK(exact_ground_energy(three) < 0.0);
  CHECK_THROWS_AS(perturbative_shift(three), DomainError);
  std::vector<TwoStateAtom> five(5, {0.1, Vector3::UnitX()});
  std::vector<Vector3> pos;
  for (int i = 0; i < 5; ++i) pos.emplace_back(0, 0, 3.0 * i);
  CHECK_THROWS_AS(CavitySystem(five, pos, {2.0, Vector3::UnitX(), std::vector<double>(5, 0.05)}), DomainError);
}
