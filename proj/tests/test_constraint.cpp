#include <doctest.h>

#include <cmath>

#include "pawclock/constraint.hpp"
#include "pawclock/kernels.hpp"

using namespace pawclock;

namespace {

Mat diag(std::initializer_list<double> e) {
  Mat m = Mat::Zero(static_cast<int>(e.size()), static_cast<int>(e.size()));
  int i = 0;
  for (double x : e) m(i, i) = x, ++i;
  return m;
}

}  // namespace

TEST_CASE("total Hamiltonian spectrum is the difference spectrum") {
  const Mat a = diag({0.0, 1.0, 3.0});
  const Mat b = diag({1.0, 5.0});
  const Mat h = total_hamiltonian(a, b);
  REQUIRE(h.rows() == 6);
  // Clock index major: (i, k) -> 2 i + k.
  const double expected[] = {-1.0, -5.0, 0.0, -4.0, 2.0, -2.0};
  for (int i = 0; i < 6; ++i) CHECK(h(i, i).real() == doctest::Approx(expected[i]));
  CHECK((h - h.diagonal().asDiagonal().toDenseMatrix()).norm() == 0.0);
}

TEST_CASE("matched pairs span the kernel") {
  const auto clock = build_clock(build_su2_rep(1.0));
  const double eps = clock.epsilon;
  const auto pairing = match_spectra(clock.H_C, diag({0.0, -eps}));
  CHECK(pairing.pairs.size() == 2);

  const auto osc = build_clock(build_h4_rep(8));
  const auto p3 = match_spectra(osc.H_C, diag({0.0, 1.0, 2.0}));
  CHECK(p3.pairs.size() == 3);

  CHECK(match_spectra(clock.H_C, diag({0.5})).pairs.empty());
  CHECK_THROWS(build_psi(match_spectra(clock.H_C, diag({0.5})), {}));

  const auto psi = build_psi(pairing, equal_profile(pairing));
  CHECK(psi.vector().norm() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(constraint_residual(psi, clock.H_C, diag({0.0, -eps})) < 1e-14);
  CHECK((total_hamiltonian(clock.H_C, diag({0.0, -eps})) * psi.vector()).norm() < 1e-14);
}

TEST_CASE("entanglement entropy of the profile") {
  const auto clock = build_clock(build_su2_rep(1.0));
  const double eps = clock.epsilon;
  const auto two = match_spectra(clock.H_C, diag({0.0, -eps}));
  const auto psi = build_psi(two, equal_profile(two));
  CHECK(psi.entanglement_entropy == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(von_neumann_entropy(reduced_density_clock(psi)) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK_FALSE(psi.separable_warning);

  const auto one = match_spectra(clock.H_C, diag({-eps}));
  const auto sep = build_psi(one, equal_profile(one));
  CHECK(sep.entanglement_entropy == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(sep.separable_warning);
}

TEST_CASE("chi2 is the clock Husimi distribution and integrates to one") {
  const auto clock = build_clock(build_su2_rep(3.0));
  const auto pairing = match_spectra(clock.H_C, clock.H_C);
  const auto psi = build_psi(pairing, random_profile(pairing, 7));
  const Mat rc = reduced_density_clock(psi);
  for (double rho : {0.1, 0.6, 1.3})
    for (double phi : {0.0, 2.0}) {
      const auto cond = conditional_state(psi, clock, rho, phi);
      const Vec lam = clock_state(clock, rho, phi).vector;
      CHECK(cond.chi2 == doctest::Approx(lam.dot(rc * lam).real()).epsilon(1e-12));
      CHECK(cond.normalized.norm() == doctest::Approx(1.0).epsilon(1e-12));
    }

  const auto quad = coherent_quadrature(clock.rep, 24, 24, clock.phase_sign);
  double total = 0.0;
  for (int i = 0; i < quad.size(); ++i)
    total += quad.weights(i) * conditional_state(psi, clock, quad.rho[i], quad.phi[i]).chi2;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(precs_decomposition_check(psi, quad) < 1e-12);
}

TEST_CASE("unsupported clock points have no normalized state") {
  const auto clock = build_clock(build_su2_rep(1.0));
  const auto pairing = match_spectra(clock.H_C, diag({0.0}));
  const auto psi = build_psi(pairing, equal_profile(pairing));
  // Only |k=0> of the clock carries weight; at rho = pi/2 the clock state is |k=2>.
  const auto cond = conditional_state(psi, clock, pi / 2, 0.0);
  CHECK(cond.chi2 < kChi2Threshold);
  CHECK_FALSE(cond.supported());
}

TEST_CASE("random profiles are seed-deterministic") {
  const auto clock = build_clock(build_su2_rep(4.0));
  const auto pairing = match_spectra(clock.H_C, clock.H_C);
  CHECK(random_profile(pairing, 42) == random_profile(pairing, 42));
  CHECK(random_profile(pairing, 42) != random_profile(pairing, 43));
  CHECK(random_profile(pairing, 42).size() == 9);
}

TEST_CASE("Gaussian profile peaks at the target energy") {
  const auto clock = build_clock(build_su2_rep(5.0));
  const auto pairing = match_spectra(clock.H_C, clock.H_C);
  const double target = -4.0 * clock.epsilon;
  const auto c = gaussian_profile(pairing, target, 2.0 * clock.epsilon);
  std::size_t best = 0;
  for (std::size_t k = 1; k < c.size(); ++k)
    if (std::abs(c[k]) > std::abs(c[best])) best = k;
  CHECK(pairing.pairs[best].energy == doctest::Approx(target).epsilon(1e-12));
}
