#include <doctest.h>

#include <cmath>

#include "pawclock/gcs.hpp"

using namespace pawclock;

namespace {

// Closed-form su2 coherent amplitudes: sqrt(C(2j,k)) cos^{2j-k} sin^k e^{-i k phi}.
Vec su2_closed_form(double j, double rho, double phi) {
  const int n = static_cast<int>(std::lround(2 * j));
  Vec v(n + 1);
  for (int k = 0; k <= n; ++k) {
    const double logc = 0.5 * (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
    v(k) = std::exp(logc) * std::pow(std::cos(rho), n - k) * std::pow(std::sin(rho), k) *
           std::polar(1.0, -k * phi);
  }
  return v;
}

}  // namespace

TEST_CASE("spin one half coherent state is (cos rho, e^{-i phi} sin rho)") {
  const auto clock = build_clock(build_su2_rep(0.5));
  const double rho = 0.7, phi = 1.9;
  const Vec v = clock_state(clock, rho, phi).vector;
  CHECK(std::abs(v(0) - std::cos(rho)) < 1e-15);
  CHECK(std::abs(v(1) - std::polar(std::sin(rho), -phi)) < 1e-15);
}

TEST_CASE("su2 displacement matches binomial amplitudes") {
  for (double j : {1.0, 3.0, 7.5}) {
    const auto clock = build_clock(build_su2_rep(j));
    for (double rho : {0.0, 0.4, 1.1}) {
      const Vec v = clock_state(clock, rho, 0.83).vector;
      CHECK((v - su2_closed_form(j, rho, 0.83)).norm() < 1e-13);
    }
  }
}

TEST_CASE("oscillator displacement matches Poisson amplitudes with the conjugate phase") {
  const auto clock = build_clock(build_h4_rep(64));
  const double rho = 1.5, phi = 0.6;
  const Vec v = clock_state(clock, rho, phi).vector;
  for (int n = 0; n < 20; ++n) {
    const double mag = std::exp(n * std::log(rho) - 0.5 * rho * rho - 0.5 * std::lgamma(n + 1.0));
    CHECK(std::abs(v(n) - std::polar(mag, n * phi)) < 1e-13);
  }
}

TEST_CASE("normal form equals the displacement") {
  for (double j : {0.5, 2.0, 10.0}) {
    const auto clock = build_clock(build_su2_rep(j));
    for (double rho : {0.0, 0.3, 1.2})
      CHECK((clock_state(clock, rho, 2.2).vector - coherent_normalized_form(clock, rho, 2.2).vector).norm() <
            1e-10);
  }
  const auto osc = build_clock(build_h4_rep(128));
  CHECK((clock_state(osc, 2.0, 0.4).vector - coherent_normalized_form(osc, 2.0, 0.4).vector).norm() < 1e-10);
}

TEST_CASE("normal form refuses rho at a pole of tan") {
  const auto clock = build_clock(build_su2_rep(2.0));
  CHECK_THROWS_AS(coherent_normalized_form(clock, pi / 2, 0.0), NumericalDomainError);
  CHECK_THROWS_AS(coherent_normalized_form(clock, 3 * pi / 2 + 1e-4, 0.0), NumericalDomainError);
  CHECK_NOTHROW(coherent_normalized_form(clock, pi / 2 - 0.01, 0.0));
}

TEST_CASE("truncated displacement refuses leaking states") {
  const auto clock = build_clock(build_h4_rep(16));
  CHECK_THROWS_AS(clock_state(clock, 3.0, 0.0), NumericalDomainError);
  CHECK_NOTHROW(clock_state(clock, 0.2, 0.0));
}

TEST_CASE("su2 overlaps follow the closed form") {
  // |<l1|l2>| = |cos r1 cos r2 + sin r1 sin r2 e^{i(p1 - p2)}|^{2j}
  const double j = 4.0;
  const auto clock = build_clock(build_su2_rep(j));
  const auto a = clock_state(clock, 0.3, 0.2);
  const auto b = clock_state(clock, 0.9, 1.7);
  const double expected =
      std::pow(std::abs(std::cos(0.3) * std::cos(0.9) + std::sin(0.3) * std::sin(0.9) * std::polar(1.0, 0.2 - 1.7)),
               2 * j);
  CHECK(std::abs(overlap(a, b)) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("clock symbol equals the closed form") {
  const auto clock = build_clock(build_su2_rep(10.0));
  for (double rho = 0.0; rho <= 0.7; rho += 0.05) {
    const double numeric = symbol(clock.H_C, clock_state(clock, rho, 0.4)).real();
    CHECK(std::abs(numeric - clock_symbol_analytic(clock, rho)) < 1e-10);
    // -2 j eps sin^2 rho
    CHECK(clock_symbol_analytic(clock, rho) == doctest::Approx(-20.0 * std::sqrt(2.0) * std::pow(std::sin(rho), 2)));
  }
  const auto osc = build_clock(build_h4_rep(64));
  CHECK(symbol(osc.H_C, clock_state(osc, 1.5, 0.0)).real() == doctest::Approx(2.25).epsilon(1e-10));
  CHECK(clock_symbol_analytic(osc, 1.5) == 2.25);

  const auto hyp = build_clock(build_su11_rep(0.5, 128));
  for (double rho : {0.2, 0.6, 1.0}) {
    const double numeric = symbol(hyp.H_C, clock_state(hyp, rho, 0.1)).real();
    // -sqrt2 k (cosh 2 rho - 1)
    const double expected = -std::sqrt(2.0) * 0.5 * (std::cosh(2 * rho) - 1.0);
    CHECK(std::abs(numeric - expected) < 1e-8 * std::abs(expected));
  }
}

TEST_CASE("coherent states resolve the identity") {
  for (double j : {0.5, 2.0, 5.0}) {
    const int n = static_cast<int>(4 * j) + 4;
    CHECK(identity_resolution_check(build_su2_rep(j), {n, n}).deviation < 1e-8);
  }
  // Too few nodes: negative control.
  CHECK(identity_resolution_check(build_su2_rep(5.0), {2, 2}).deviation > 0.1);

  const auto rep = build_h4_rep(64);
  const auto res = identity_resolution_check(rep, {rep.valid_dim + 8, 2 * rep.valid_dim + 2});
  CHECK(res.checked_dim == 32);
  CHECK(res.deviation < 1e-6);
  CHECK_THROWS(identity_resolution_check(build_su11_rep(0.5, 16), {8, 8}));
}

TEST_CASE("phi derivative identity for the clock bra") {
  const auto clock = build_clock(build_su2_rep(6.0));
  Vec omega = Vec::Zero(clock.dim());
  for (int k = 0; k < clock.dim(); ++k) omega(k) = cplx{std::cos(0.3 * k), std::sin(0.7 * k)};
  const auto chk = phi_derivative_identity_check(clock, 0.5, 0.8, omega, 1e-3);
  CHECK(chk.residual < 1e-5 * std::abs(chk.lhs));
  CHECK(chk.slope == doctest::Approx(2.0).epsilon(0.05));
}
