#include <doctest.h>

#include <cmath>

#include "pawclock/phase.hpp"

using namespace pawclock;

namespace {

std::vector<double> periodic(int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(2 * pi * i / n);
  return v;
}

}  // namespace

TEST_CASE("su2 phase operator is the cyclic lowering shift") {
  const auto clock = build_clock(build_su2_rep(0.5));
  const auto ph = build_phase_operator(clock);
  Mat swap(2, 2);
  swap << 0.0, 1.0, 1.0, 0.0;
  CHECK((ph.exp_minus_iphi - swap).norm() < 1e-14);
  CHECK(ph.reference_index == 0);
  CHECK(ph.boundary_index == 1);

  const auto big = build_clock(build_su2_rep(3.0));
  const auto pb = build_phase_operator(big);
  for (int k = 1; k < 7; ++k) CHECK(std::abs(pb.exp_minus_iphi(k - 1, k) - 1.0) < 1e-13);
  CHECK(std::abs(pb.exp_minus_iphi(6, 0) - 1.0) < 1e-13);
}

TEST_CASE("h4 phase operator raises the number with wrap-around") {
  const auto clock = build_clock(build_h4_rep(10));
  const auto ph = build_phase_operator(clock);
  for (int k = 0; k < 10; ++k) CHECK(std::abs(ph.exp_minus_iphi(k + 1, k) - 1.0) < 1e-13);
  CHECK(std::abs(ph.exp_minus_iphi(0, 10) - 1.0) < 1e-13);
}

TEST_CASE("phase invariants") {
  for (double j : {0.5, 4.0, 20.0}) {
    const auto clock = build_clock(build_su2_rep(j));
    const auto inv = phase_invariants(clock, build_phase_operator(clock));
    CHECK(inv.unitarity < 1e-12);
    CHECK(inv.hermiticity < 1e-12);
    CHECK(inv.sin_cos_commutator < 1e-12);
    CHECK(inv.polar_residual < 1e-10);
  }
}

TEST_CASE("energy-phase commutator holds away from the ladder ends") {
  const auto clock = build_clock(build_su2_rep(20.0));
  const auto c = commutator_check(clock, build_phase_operator(clock));
  CHECK(c.interior < 1e-10);
  // The wrap-around term breaks the relation by about the full spectral width.
  CHECK(c.full > 10.0);

  const auto scaled = build_clock(build_su2_rep(20.0), 0, std::nullopt, 2.0);
  CHECK(commutator_check(scaled, build_phase_operator(scaled)).full == doctest::Approx(2.0 * c.full).epsilon(1e-10));

  const auto osc = build_clock(build_h4_rep(64));
  CHECK(commutator_check(osc, build_phase_operator(osc)).interior < 1e-10);
}

TEST_CASE("uncertainty slack on the coherent grid") {
  const auto clock = build_clock(build_su2_rep(15.0));
  const auto ph = build_phase_operator(clock);
  std::vector<double> rhos;
  for (int i = 0; i < 15; ++i) rhos.push_back(1.2 * i / 14);
  const auto g = uncertainty_grid(clock, ph, rhos, periodic(15));
  CHECK(g.audits.size() == 225);
  CHECK(g.skipped == 0);
  CHECK(g.min_slack >= -1e-12);
  // rho = 0 is the reference state: both sides vanish.
  CHECK(std::abs(g.audits[0].slack) < 1e-12);
}

TEST_CASE("small-angle energy-time relation") {
  const auto clock = build_clock(build_su2_rep(15.0));
  const auto ph = build_phase_operator(clock);
  const auto checks = small_angle_checks(clock, ph, {0.3, 0.5, 0.7, 1.0}, {-0.1, -0.05, 0.0, 0.05, 0.1});
  double lo = 1e300;
  for (const auto& c : checks) lo = std::min(lo, c.ratio);
  CHECK(lo == doctest::Approx(9.800732975030032e-01).epsilon(1e-10));
  CHECK(lo > 0.95);
  CHECK_THROWS(small_angle_checks(clock, ph, {0.3}, {0.5}));
}

TEST_CASE("phase expectations approach sin and cos of the classical angle") {
  const auto su2 = classical_phase_expectations(AlgebraKind::su2, {40, 5, 20, 10}, 0.4, 0.9);
  const double s_su2[] = {1.124137725609459e-01, 4.657035576608626e-02, 2.010509229615487e-02,
                          9.708465223768559e-03};
  const double c_su2[] = {8.922666226304132e-02, 3.695595919366013e-02, 1.595441906908923e-02,
                          7.704163722108692e-03};
  for (int i = 0; i < 4; ++i) {
    CHECK(su2.records[i].err_sin == doctest::Approx(s_su2[i]).epsilon(1e-10));
    CHECK(su2.records[i].err_cos == doctest::Approx(c_su2[i]).epsilon(1e-10));
  }
  CHECK(su2.sin_decreasing);
  CHECK(su2.cos_decreasing);

  const auto h4 = classical_phase_expectations(AlgebraKind::h4, {64, 128, 256, 512}, 0.4, 0.9);
  const double s_h4[] = {3.052009012185997e-02, 1.310577008541181e-02, 6.303685584023833e-03,
                         3.103596279423249e-03};
  const double c_h4[] = {2.421925254845292e-02, 1.040009889463600e-02, 5.002296930838979e-03,
                         2.462862389975395e-03};
  for (int i = 0; i < 4; ++i) {
    CHECK(h4.records[i].err_sin == doctest::Approx(s_h4[i]).epsilon(1e-9));
    CHECK(h4.records[i].err_cos == doctest::Approx(c_h4[i]).epsilon(1e-9));
  }
  CHECK(h4.sin_decreasing);
  CHECK(h4.cos_decreasing);
}
