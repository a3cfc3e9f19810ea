#include <doctest.h>

#include <cmath>

#include "pawclock/algebra.hpp"

using namespace pawclock;

namespace {
const double kEps = std::sqrt(2.0);
}

TEST_CASE("algebra names round-trip") {
  for (auto k : {AlgebraKind::su2, AlgebraKind::h4, AlgebraKind::su11}) CHECK(parse_algebra(to_string(k)) == k);
  CHECK_THROWS_AS(parse_algebra("so3"), std::invalid_argument);
}

TEST_CASE("su2 spin one half: lowering operator and clock spectrum") {
  const auto rep = build_su2_rep(0.5);
  REQUIRE(rep.dim == 2);
  // S^- |k=1> = |k=0> with unit amplitude.
  CHECK(std::abs(rep.raising_ops[0](0, 1) - 1.0) < 1e-15);
  CHECK(std::abs(rep.raising_ops[0](1, 0)) == 0.0);

  const auto clock = build_clock(rep);
  CHECK(clock.epsilon == doctest::Approx(kEps).epsilon(1e-15));
  CHECK(std::abs(clock.H_C(0, 0)) < 1e-15);
  CHECK(clock.H_C(1, 1).real() == doctest::Approx(-kEps).epsilon(1e-15));
}

TEST_CASE("su2 clock constants follow the spin") {
  for (double j : {0.5, 1.0, 3.5, 10.0}) {
    const auto clock = build_clock(build_su2_rep(j));
    CHECK(clock.sigma2 == 1);
    CHECK(clock.b2 == doctest::Approx(2.0 * j));
    CHECK(clock.K == doctest::Approx(-kEps * j));
    // Spectrum {0, -eps, ..., -2j eps}.
    Eigen::SelfAdjointEigenSolver<Mat> es(clock.H_C);
    const int n = clock.dim();
    for (int k = 0; k < n; ++k) CHECK(es.eigenvalues()(n - 1 - k) == doctest::Approx(-kEps * k).epsilon(1e-12));
    CHECK((clock.H_C * clock.rep.reference_state).norm() < 1e-12);
  }
}

TEST_CASE("Cartan relations hold for su2 up to j = 50") {
  for (double j = 0.5; j <= 50.0; j += 0.5) {
    const auto report = verify_cartan(build_su2_rep(j), 1e-12);
    INFO("j = " << j);
    CHECK(report.pass(false));
  }
}

TEST_CASE("h4: relations hold on the valid block and fail at the cutoff") {
  for (int n : {8, 64, 256}) {
    const auto rep = build_h4_rep(n);
    const auto report = verify_cartan(rep, 1e-12);
    CHECK(report.pass(true));
    CHECK(report.max_valid() < 1e-12);
    // [a, a^+] = 1 breaks only in the last row of the truncated space.
    CHECK(report.max_full() > 0.1 / n);
    CHECK(report.worst_row == n);
  }
  const auto clock = build_clock(build_h4_rep(16));
  CHECK(clock.phase_sign == -1);
  CHECK(clock.epsilon == 1.0);
  CHECK(clock.H_C(3, 3).real() == doctest::Approx(3.0));
}

TEST_CASE("su11 clock uses an imaginary phase") {
  const auto rep = build_su11_rep(0.5, 64);
  CHECK(verify_cartan(rep, 1e-12).pass(true));
  const auto clock = build_clock(rep);
  CHECK(clock.sigma2 == -1);
  CHECK(std::abs(clock.sigma - I_unit) < 1e-15);
  CHECK(clock.epsilon == doctest::Approx(kEps));
  CHECK(clock.b2 == doctest::Approx(-1.0));
  CHECK(clock.K == doctest::Approx(kEps * 0.5));
  CHECK((clock.H_C - clock.H_C.adjoint()).norm() < 1e-14);
}

TEST_CASE("invalid representations and clocks are rejected") {
  CHECK_THROWS_AS(build_su2_rep(0.3), std::invalid_argument);
  CHECK_THROWS_AS(build_su2_rep(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_h4_rep(1), std::invalid_argument);
  CHECK_THROWS_AS(build_su11_rep(0.0, 10), std::invalid_argument);
  CHECK_THROWS(build_clock(build_su2_rep(1.0), 0, std::nullopt, 0.0));
  // A phase that does not make epsilon real and positive.
  CHECK_THROWS(build_clock(build_su2_rep(1.0), 0, cplx{-1.0, 0.0}));
}

TEST_CASE("energy scale multiplies the clock Hamiltonian") {
  const auto a = build_clock(build_su2_rep(2.0));
  const auto b = build_clock(build_su2_rep(2.0), 0, std::nullopt, 3.0);
  CHECK(b.epsilon == doctest::Approx(3.0 * a.epsilon));
  CHECK((b.H_C - 3.0 * a.H_C).norm() < 1e-13);
}
