#include <doctest.h>

#include <cmath>

#include "pawclock/dynamics.hpp"

using namespace pawclock;

// Frozen values from tests/oracles/derive_oracles.py, which builds the
// conditional states from closed-form binomial amplitudes.

TEST_CASE("stationary residuals match the closed-form oracle") {
  SweepParams sp;
  sp.kind = ResidualKind::stationary;
  const auto sw = convergence_sweep({40, 5, 20, 10}, sp);
  REQUIRE(sw.records.size() == 4);
  const double relative[] = {3.763696599812258e-01, 2.278815831574087e-01, 1.301992864311640e-01,
                             7.078487705292658e-02};
  const double absolute[] = {1.696979872930721, 2.054950231902332, 2.348176189915505, 2.553245374192679};
  const double sizes[] = {5, 10, 20, 40};
  for (int i = 0; i < 4; ++i) {
    CHECK(sw.records[i].clock_size == sizes[i]);
    CHECK(sw.records[i].residual == doctest::Approx(relative[i]).epsilon(1e-10));
    CHECK(sw.records[i].oracle_residual == doctest::Approx(absolute[i]).epsilon(1e-10));
  }
  CHECK(sw.strictly_decreasing);
  CHECK(sw.loglog_slope < -0.5);
}

TEST_CASE("h4 stationary residual falls as the oscillator clock grows") {
  SweepParams sp;
  sp.algebra = AlgebraKind::h4;
  sp.kind = ResidualKind::stationary;
  const auto sw = convergence_sweep({64, 128, 256}, sp);
  CHECK(sw.strictly_decreasing);
  CHECK(sw.records[0].rho == doctest::Approx(2.0));
}

TEST_CASE("emergent Schrodinger equation") {
  const auto clock = build_clock(build_su2_rep(10.0));
  const auto s = make_setup(clock, SetupParams{});
  const auto r = schrodinger_residual(s, 0.6, 0.3, 1e-3);
  CHECK(r.residual == doctest::Approx(8.309485014049617e-05).epsilon(1e-6));
  CHECK(r.slope == doctest::Approx(2.0).epsilon(1e-3));

  std::vector<double> phis;
  for (int i = 0; i <= 16; ++i) phis.push_back(2 * pi * i / 16);
  CHECK(propagator_residual(s, 0.6, phis) < 1e-10);
  CHECK(chi2_drift(s, 0.6, phis) < 1e-13);
}

TEST_CASE("resonant setup lies in the kernel") {
  for (auto kind : {AlgebraKind::su2, AlgebraKind::h4}) {
    const auto clock = build_clock(build_rep(kind, kind == AlgebraKind::su2 ? 6.0 : 64.0));
    SetupParams p;
    if (kind == AlgebraKind::h4) p.rho_target = 2.0;
    const auto s = make_setup(clock, p);
    REQUIRE(s.system_clock.has_value());
    CHECK(constraint_residual(s.psi, s.clock.H_C, s.H_Gamma) < 1e-12);
    CHECK(s.pairing.pairs.size() == static_cast<std::size_t>(clock.dim()));
  }
}

TEST_CASE("explicit system levels and the empty kernel") {
  const auto clock = build_clock(build_su2_rep(2.0));
  SetupParams p;
  p.system_levels = {0.0, -1.0, -2.5};
  p.profile = ProfileKind::equal;
  const auto s = make_setup(clock, p);
  CHECK_FALSE(s.system_clock.has_value());
  CHECK(s.pairing.pairs.size() == 2);

  p.system_levels = {0.5, 7.0};
  CHECK_THROWS_AS(make_setup(clock, p), NumericalDomainError);
}

TEST_CASE("quantum time per unit phi is one over epsilon") {
  for (double scale : {1.0, 2.5}) {
    const auto clock = build_clock(build_su2_rep(8.0), 0, std::nullopt, scale);
    const auto s = make_setup(clock, SetupParams{});
    CHECK(quantum_time_rate(s, 0.6, 0.01) == doctest::Approx(1.0 / clock.epsilon).epsilon(1e-12));
    CHECK(quantum_time_rate(s, 0.6, 0.05) == doctest::Approx(1.0 / clock.epsilon).epsilon(1e-12));
  }
}

TEST_CASE("sweeps need three sizes") {
  CHECK_THROWS(convergence_sweep({5, 10}, SweepParams{}));
}
