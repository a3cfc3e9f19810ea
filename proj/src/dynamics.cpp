#include "pawclock/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "pawclock/finite_difference.hpp"

namespace pawclock {

namespace {

Vec normalized_conditional(const ConstraintSetup& s, double rho, double phi) {
  auto c = conditional_state(s.psi, s.clock, rho, phi);
  if (!c.supported())
    throw NumericalDomainError("unsupported rho: chi2(rho) = " + std::to_string(c.chi2) +
                               " is below the normalization threshold");
  return c.normalized;
}

}  // namespace

ConstraintSetup make_setup(const ClockModel& clock, const SetupParams& params) {
  ConstraintSetup s;
  s.clock = clock;
  if (params.system_levels.empty()) {
    s.system_clock = clock;
    s.H_Gamma = clock.H_C;
  } else {
    RealVec levels(static_cast<Eigen::Index>(params.system_levels.size()));
    for (std::size_t i = 0; i < params.system_levels.size(); ++i)
      levels(static_cast<Eigen::Index>(i)) = params.system_levels[i] * clock.epsilon;
    s.H_Gamma = levels.cast<cplx>().asDiagonal();
  }
  s.pairing = match_spectra(clock.H_C, s.H_Gamma, 1e-9 * std::max(1.0, clock.epsilon));
  if (s.pairing.pairs.empty()) throw NumericalDomainError("no constraint states: clock and system spectra never coincide");

  std::vector<cplx> coeffs;
  switch (params.profile) {
    case ProfileKind::gaussian:
      coeffs = gaussian_profile(s.pairing, energy_of_rho(clock, params.rho_target),
                                params.width_levels * clock.epsilon);
      break;
    case ProfileKind::equal: coeffs = equal_profile(s.pairing); break;
    case ProfileKind::random: coeffs = random_profile(s.pairing, params.seed); break;
  }
  s.psi = build_psi(s.pairing, coeffs);
  return s;
}

SchrodingerResidual schrodinger_residual(const ConstraintSetup& s, double rho, double phi, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("schrodinger_residual: step must be > 0");
  const Vec center = normalized_conditional(s, rho, phi);
  const Vec rhs = s.H_Gamma * center;
  auto state = [&](double p) -> Vec { return normalized_conditional(s, rho, p); };
  auto residual = [&](double step) {
    const Vec d = fd::central(state, phi, step);
    return (I_unit * s.clock.epsilon * d - rhs).norm();
  };
  SchrodingerResidual out;
  out.residual = residual(h);
  out.residual_half = residual(0.5 * h);
  out.slope = fd::richardson_slope(out.residual, out.residual_half);
  return out;
}

double propagator_residual(const ConstraintSetup& s, double rho, const std::vector<double>& phis) {
  const Vec phi0 = conditional_state(s.psi, s.clock, rho, 0.0).unnormalized;
  Eigen::SelfAdjointEigenSolver<Mat> es(s.H_Gamma);
  const Mat& V = es.eigenvectors();
  const Vec base = V.adjoint() * phi0;
  double worst = 0.0;
  for (double phi : phis) {
    const Vec actual = conditional_state(s.psi, s.clock, rho, phi).unnormalized;
    Vec evolved = base;
    for (int i = 0; i < evolved.size(); ++i)
      evolved(i) *= std::polar(1.0, -es.eigenvalues()(i) * phi / s.clock.epsilon);
    worst = std::max(worst, (actual - V * evolved).norm());
  }
  return worst;
}

double chi2_drift(const ConstraintSetup& s, double rho, const std::vector<double>& phis) {
  if (phis.empty()) return 0.0;
  const double ref = conditional_state(s.psi, s.clock, rho, phis.front()).chi2;
  double worst = 0.0;
  for (double phi : phis)
    worst = std::max(worst, std::abs(conditional_state(s.psi, s.clock, rho, phi).chi2 - ref));
  return worst;
}

double energy_of_rho(const ClockModel& clock, double rho) { return clock_symbol_analytic(clock, rho); }

StationaryResidual stationary_residual(const ConstraintSetup& s, double rho, double phi) {
  const Vec v = normalized_conditional(s, rho, phi);
  StationaryResidual out;
  out.energy = energy_of_rho(s.clock, rho);
  out.absolute = (s.H_Gamma * v - out.energy * v).norm();
  out.relative = out.absolute / std::max(std::abs(out.energy), s.clock.epsilon);
  return out;
}

double quantum_time_rate(const ConstraintSetup& s, double rho, double phi) {
  if (phi == 0.0) throw std::invalid_argument("quantum_time_rate: phi must be nonzero");
  Eigen::SelfAdjointEigenSolver<Mat> es(s.H_Gamma);
  const Vec a0 = es.eigenvectors().adjoint() * conditional_state(s.psi, s.clock, rho, 0.0).unnormalized;
  const Vec a1 = es.eigenvectors().adjoint() * conditional_state(s.psi, s.clock, rho, phi).unnormalized;
  int best = -1;
  for (int i = 0; i < a0.size(); ++i) {
    if (std::abs(es.eigenvalues()(i)) < 1e-9 * s.clock.epsilon) continue;
    if (best < 0 || std::abs(a0(i)) > std::abs(a0(best))) best = i;
  }
  if (best < 0 || std::abs(a0(best)) < 1e-12)
    throw NumericalDomainError("quantum_time_rate: conditional state has no evolving component");
  const double dtheta = std::arg(a1(best) / a0(best));
  return -dtheta / (es.eigenvalues()(best) * phi);
}

SweepResult convergence_sweep(const std::vector<double>& sizes_in, const SweepParams& params) {
  if (sizes_in.size() < 3) throw std::invalid_argument("convergence_sweep: need at least 3 clock sizes");
  std::vector<double> sizes = sizes_in;
  std::sort(sizes.begin(), sizes.end());

  SweepResult out;
  for (double size : sizes) {
    const ClockModel clock = build_clock(build_rep(params.algebra, size));
    SetupParams sp = params.setup;
    double rho = sp.rho_target;
    if (params.algebra == AlgebraKind::h4) {
      rho = std::sqrt(params.h4_fill * size);
      sp.rho_target = rho;
    }
    const ConstraintSetup setup = make_setup(clock, sp);

    ConvergenceRecord rec;
    rec.clock_size = size;
    rec.dim = clock.dim();
    rec.rho = rho;
    rec.phi = params.phi;
    rec.h = params.h;
    if (params.kind == ResidualKind::stationary) {
      const auto r = stationary_residual(setup, rho, params.phi);
      rec.residual = r.relative;
      rec.oracle_residual = r.absolute;
    } else {
      rec.residual = schrodinger_residual(setup, rho, params.phi, params.h).residual;
      rec.oracle_residual = propagator_residual(setup, rho, {params.phi, 2.0 * params.phi, pi});
    }
    out.records.push_back(rec);
  }

  out.strictly_decreasing = true;
  for (std::size_t i = 1; i < out.records.size(); ++i)
    if (!(out.records[i].residual < out.records[i - 1].residual)) out.strictly_decreasing = false;
  std::vector<double> xs, ys;
  for (const auto& r : out.records) {
    xs.push_back(r.clock_size);
    ys.push_back(std::max(r.residual, 1e-300));
  }
  out.loglog_slope = fd::loglog_slope(xs, ys);
  return out;
}

}  // namespace pawclock
