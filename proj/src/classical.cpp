#include "pawclock/classical.hpp"

#include <algorithm>
#include <cmath>

#include "pawclock/dynamics.hpp"
#include "pawclock/finite_difference.hpp"
#include "pawclock/gcs.hpp"
#include "pawclock/kernels.hpp"

namespace pawclock {

namespace {

const double kSqrt2 = std::sqrt(2.0);

cplx amplitude(double rho, const ChartConstants& k) {
  if (k.kind == AlgebraKind::h4) return rho;
  return k.b * k.sigma * std::sin(k.sigma * rho);
}

cplx amplitude_drho(double rho, const ChartConstants& k) {
  if (k.kind == AlgebraKind::h4) return 1.0;
  return k.b * k.sigma * k.sigma * std::cos(k.sigma * rho);
}

cplx p_factor(const ChartConstants& k) { return static_cast<double>(k.phase_sign) / (k.sigma * k.sigma); }

void check_unit(const RealVec& v) {
  if (v.size() == 0 || std::abs(v.squaredNorm() - 1.0) > 1e-12)
    throw std::invalid_argument("map_F: v must be a unit vector");
}

double two_form_coefficient(double rho, const ChartConstants& k) {
  if (k.kind == AlgebraKind::h4) return -2.0 * k.hbar * rho;
  return (k.hbar * k.b * k.b * k.sigma * std::sin(2.0 * k.sigma * rho)).real();
}

double guarded_coefficient(double rho, const ChartConstants& k) {
  const double c = two_form_coefficient(rho, k);
  const double scale = k.hbar * std::max(1.0, std::abs(k.b * k.b));
  if (std::abs(c) < 1e-10 * scale)
    throw NumericalDomainError("Poisson bracket: coordinate singularity at rho = " + std::to_string(rho));
  return c;
}

struct ComplexPartials {
  cplx value, d_rho, d_phi;
};

}  // namespace

ChartConstants chart_constants(const ClockModel& clock, double hbar) {
  ChartConstants k;
  k.kind = clock.kind();
  k.b = std::sqrt(cplx{clock.b2, 0.0});
  k.sigma = clock.sigma;
  k.sigma2 = clock.sigma2;
  k.phase_sign = clock.phase_sign;
  k.epsilon = clock.epsilon;
  k.hbar = hbar;
  return k;
}

std::pair<Vec, Vec> map_F_complex(double rho, double phi, const RealVec& v, const ChartConstants& k) {
  check_unit(v);
  const double ph = phi + k.phase_offset;
  const cplx a = kSqrt2 * amplitude(rho, k);
  Vec q = (a * std::cos(ph)) * v.cast<cplx>();
  Vec p = (p_factor(k) * a * std::sin(ph)) * v.cast<cplx>();
  return {q, p};
}

DarbouxPoint map_F(double rho, double phi, const RealVec& v, const ChartConstants& k) {
  if (k.sigma2 != 1) throw NumericalDomainError("map_F: the sigma^2 = -1 chart is complex; use map_F_complex");
  auto [q, p] = map_F_complex(rho, phi, v, k);
  DarbouxPoint x;
  x.q = q.real();
  x.p = p.real();
  x.v = v;
  x.rho = rho;
  x.phi = phi;
  return x;
}

double clock_energy(double rho, const ChartConstants& k) {
  if (k.kind == AlgebraKind::h4) return k.epsilon * rho * rho;
  return (0.5 * k.epsilon * k.b * k.b * (std::cos(2.0 * k.sigma * rho) - 1.0)).real();
}

double clock_energy_drho(double rho, const ChartConstants& k) {
  if (k.kind == AlgebraKind::h4) return 2.0 * k.epsilon * rho;
  return (-k.epsilon * k.b * k.b * k.sigma * std::sin(2.0 * k.sigma * rho)).real();
}

double system_energy(const DarbouxPoint& x, const ChartConstants& k) {
  return -k.phase_sign * k.epsilon * (x.q.squaredNorm() + x.p.squaredNorm()) / (2.0 * k.sigma2);
}

PullbackCheck pullback_two_form(double rho, double phi, const RealVec& v, const ChartConstants& k) {
  const double h = 1e-3;
  auto q_at = [&](double r, double f) -> Vec { return map_F_complex(r, f, v, k).first; };
  auto p_at = [&](double r, double f) -> Vec { return map_F_complex(r, f, v, k).second; };
  const Vec q_r = fd::five_point([&](double r) { return q_at(r, phi); }, rho, h);
  const Vec q_f = fd::five_point([&](double f) { return q_at(rho, f); }, phi, h);
  const Vec p_r = fd::five_point([&](double r) { return p_at(r, phi); }, rho, h);
  const Vec p_f = fd::five_point([&](double f) { return p_at(rho, f); }, phi, h);

  // dp ^ dq = (p_phi q_rho - p_rho q_phi) dphi ^ drho
  cplx c = 0.0;
  for (int j = 0; j < v.size(); ++j) c += p_f(j) * q_r(j) - p_r(j) * q_f(j);
  c *= k.hbar;

  PullbackCheck out;
  out.analytic = two_form_coefficient(rho, k);
  out.numeric = c.real();
  out.residual = std::abs(c - out.analytic);
  return out;
}

double poisson_bracket_clock(const Partials& f, const Partials& g, double rho, const ChartConstants& k) {
  return (f.d_rho * g.d_phi - f.d_phi * g.d_rho) / guarded_coefficient(rho, k);
}

double poisson_bracket_clock(const ChartFunction& f, const ChartFunction& g, double rho, double phi,
                             const ChartConstants& k, double h) {
  auto partials = [&](const ChartFunction& fn) {
    Partials d;
    d.d_rho = fd::five_point([&](double r) { return fn(r, phi); }, rho, h);
    d.d_phi = fd::five_point([&](double p) { return fn(rho, p); }, phi, h);
    return d;
  };
  return poisson_bracket_clock(partials(f), partials(g), rho, k);
}

HamiltonReport hamilton_check(const ChartConstants& k, const RealVec& v, const std::vector<double>& rhos,
                              const std::vector<double>& phis) {
  check_unit(v);
  const double h = 1e-4;
  const double rate = k.epsilon / k.hbar;
  HamiltonReport out;
  for (double rho : rhos) {
    const double c = guarded_coefficient(rho, k);
    const double H_r = clock_energy_drho(rho, k);
    const double H_r_fd = fd::five_point([&](double r) { return clock_energy(r, k); }, rho, h);
    const cplx a = kSqrt2 * amplitude(rho, k);
    const cplx a_r = kSqrt2 * amplitude_drho(rho, k);
    const cplx pf = p_factor(k);
    for (double phi : phis) {
      const double ph = phi + k.phase_offset;
      const auto qp = [&](double r, double f) { return map_F_complex(r, f, v, k); };
      for (int j = 0; j < v.size(); ++j) {
        // Analytic partials of q_j and p_j; H depends on rho only.
        const ComplexPartials q{a * std::cos(ph) * v(j), a_r * std::cos(ph) * v(j), -a * std::sin(ph) * v(j)};
        const ComplexPartials p{pf * a * std::sin(ph) * v(j), pf * a_r * std::sin(ph) * v(j),
                                pf * a * std::cos(ph) * v(j)};
        for (const auto& x : {q, p}) {
          const cplx bracket = -x.d_phi * H_r / c;
          out.max_analytic = std::max(out.max_analytic, std::abs(bracket - rate * x.d_phi));
        }

        const cplx q_f = fd::five_point([&](double f) { return qp(rho, f).first(j); }, phi, h);
        const cplx p_f = fd::five_point([&](double f) { return qp(rho, f).second(j); }, phi, h);
        out.max_fd = std::max(out.max_fd, std::abs(-q_f * H_r_fd / c - rate * q_f));
        out.max_fd = std::max(out.max_fd, std::abs(-p_f * H_r_fd / c - rate * p_f));
      }
      if (k.sigma2 == 1) {
        const double shell = system_energy(map_F(rho, phi, v, k), k) - clock_energy(rho, k);
        out.max_shell = std::max(out.max_shell, std::abs(shell));
      }
      ++out.points;
    }
  }
  return out;
}

double classical_time_rate(const ChartConstants& k, double rho, double phi) {
  const double ph = phi + k.phase_offset;
  const Partials q{(kSqrt2 * amplitude_drho(rho, k) * std::cos(ph)).real(),
                   (-kSqrt2 * amplitude(rho, k) * std::sin(ph)).real()};
  if (k.sigma2 != 1) throw NumericalDomainError("classical_time_rate: real chart required");
  if (std::abs(q.d_phi) < 1e-12) throw NumericalDomainError("classical_time_rate: dq/dphi vanishes here");
  const Partials H{clock_energy_drho(rho, k), 0.0};
  const double flow = poisson_bracket_clock(q, H, rho, k);
  return q.d_phi / flow;
}

BetaDistribution beta_distribution(const CompositeState& psi, const ClockModel& clock, const ClockModel& system,
                                   const BetaGrid& grid, double support_threshold) {
  if (!(support_threshold > 0.0)) throw std::invalid_argument("beta_distribution: threshold must be > 0");
  BetaDistribution out;
  out.clock_grid = coherent_quadrature(clock.rep, grid.clock_polar, grid.clock_azimuth, clock.phase_sign);
  out.system_grid = coherent_quadrature(system.rep, grid.system_polar, grid.system_azimuth, system.phase_sign);
  if (out.clock_grid.states.rows() != psi.amplitudes.rows() ||
      out.system_grid.states.rows() != psi.amplitudes.cols())
    throw std::invalid_argument("beta_distribution: grids do not match the constraint state");
  out.beta = kernels::beta_grid(out.clock_grid.states, psi.amplitudes, out.system_grid.states);
  const Eigen::MatrixXd w2 = out.beta.cwiseAbs2();
  out.normalization = out.clock_grid.weights.dot(w2 * out.system_grid.weights);
  out.max_weight = w2.maxCoeff();
  out.threshold = support_threshold;
  for (int i = 0; i < w2.rows(); ++i)
    for (int k = 0; k < w2.cols(); ++k)
      if (w2(i, k) >= support_threshold * out.max_weight) out.support.emplace_back(i, k);
  return out;
}

ClassicalConstraintReport classical_constraint_check(const BetaDistribution& beta, const ClockModel& clock,
                                                     const ClockModel& system) {
  if (beta.support.empty()) throw NumericalDomainError("classical_constraint_check: empty support");
  const double scale =
      clock.epsilon * (clock.b2 != 0.0 ? std::abs(clock.b2) : static_cast<double>(clock.rep.valid_dim));
  std::vector<double> hc(beta.clock_grid.rho.size()), hg(beta.system_grid.rho.size());
  for (std::size_t i = 0; i < hc.size(); ++i) hc[i] = clock_symbol_analytic(clock, beta.clock_grid.rho[i]);
  for (std::size_t k = 0; k < hg.size(); ++k) hg[k] = clock_symbol_analytic(system, beta.system_grid.rho[k]);

  ClassicalConstraintReport out;
  out.support_size = static_cast<int>(beta.support.size());
  for (const auto& [i, k] : beta.support)
    out.max_mismatch = std::max(out.max_mismatch, std::abs(hc[i] - hg[k]) / scale);

  int ci = 0, ck = 0;
  for (std::size_t i = 0; i < hc.size(); ++i)
    for (std::size_t k = 0; k < hg.size(); ++k) {
      const double m = std::abs(hc[i] - hg[k]) / scale;
      if (m > out.control_mismatch) {
        out.control_mismatch = m;
        ci = static_cast<int>(i);
        ck = static_cast<int>(k);
      }
    }
  out.control_weight = std::norm(beta.beta(ci, ck)) / beta.max_weight;
  return out;
}

ClassicalSweep classical_limit_sweep(const std::vector<double>& spins_in, double rho_target, double width_levels,
                                     double support_threshold) {
  if (spins_in.size() < 3) throw std::invalid_argument("classical_limit_sweep: need at least 3 sizes");
  std::vector<double> spins = spins_in;
  std::sort(spins.begin(), spins.end());
  ClassicalSweep out;
  for (double j : spins) {
    const ClockModel clock = build_clock(build_rep(AlgebraKind::su2, j));
    SetupParams sp;
    sp.rho_target = rho_target;
    sp.width_levels = width_levels;
    const ConstraintSetup setup = make_setup(clock, sp);
    const int n = static_cast<int>(std::lround(2.0 * j)) + 2;
    const BetaGrid grid{n, n, n, n};
    const auto beta = beta_distribution(setup.psi, clock, *setup.system_clock, grid, support_threshold);
    const auto rep = classical_constraint_check(beta, clock, *setup.system_clock);
    ClassicalSweepRecord rec;
    rec.size = j;
    rec.max_mismatch = rep.max_mismatch;
    rec.normalization = beta.normalization;
    rec.support_size = rep.support_size;
    rec.control_mismatch = rep.control_mismatch;
    rec.control_weight = rep.control_weight;
    out.records.push_back(rec);
  }
  out.strictly_decreasing = true;
  for (std::size_t i = 1; i < out.records.size(); ++i)
    if (!(out.records[i].max_mismatch < out.records[i - 1].max_mismatch)) out.strictly_decreasing = false;
  return out;
}

}  // namespace pawclock
