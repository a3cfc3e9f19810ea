#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "pawclock/algebra.hpp"
#include "pawclock/constraint.hpp"
#include "pawclock/quadrature.hpp"
#include "pawclock/types.hpp"

namespace pawclock {

// ---- double coherent-state decomposition -------------------------------

struct BetaDistribution {
  CoherentQuadrature clock_grid;
  CoherentQuadrature system_grid;
  Mat beta;                    // beta(i, k) = (<Omega_i| x <gamma_k|) Psi
  double normalization = 0.0;  // sum |beta|^2 w_i w_k
  double threshold = 0.0;      // relative support threshold
  double max_weight = 0.0;     // max |beta|^2
  std::vector<std::pair<int, int>> support;

  bool in_support(int i, int k) const { return std::norm(beta(i, k)) >= threshold * max_weight; }
};

struct BetaGrid {
  int clock_polar = 0;
  int clock_azimuth = 0;
  int system_polar = 0;
  int system_azimuth = 0;
};

/// Both sides need a coherent-state measure (su2 or h4).
BetaDistribution beta_distribution(const CompositeState& psi, const ClockModel& clock, const ClockModel& system,
                                   const BetaGrid& grid, double support_threshold = 1e-6);

struct ClassicalConstraintReport {
  double max_mismatch = 0.0;  // max over support of |H_C(Omega) - H_Gamma(gamma)| / (eps b^2)
  int support_size = 0;
  // Negative control: the grid point with the largest mismatch overall.
  double control_mismatch = 0.0;
  double control_weight = 0.0;  // its |beta|^2 / max |beta|^2
};

ClassicalConstraintReport classical_constraint_check(const BetaDistribution& beta, const ClockModel& clock,
                                                     const ClockModel& system);

struct ClassicalSweepRecord {
  double size = 0.0;
  double max_mismatch = 0.0;
  double normalization = 0.0;
  int support_size = 0;
  double control_mismatch = 0.0;
  double control_weight = 0.0;
};

struct ClassicalSweep {
  std::vector<ClassicalSweepRecord> records;
  bool strictly_decreasing = false;
};

/// Joint sweep j_C = j_Gamma with a resonant Gaussian-profile constraint state.
ClassicalSweep classical_limit_sweep(const std::vector<double>& spins, double rho_target, double width_levels,
                                     double support_threshold = 1e-6);

// ---- Darboux chart ------------------------------------------------------

struct ChartConstants {
  AlgebraKind kind = AlgebraKind::su2;
  cplx b{0.0, 0.0};
  cplx sigma{1.0, 0.0};
  int sigma2 = 1;
  int phase_sign = 1;
  double epsilon = 1.0;
  double hbar = 1.0;          // Darboux constant of the target symplectic form
  double phase_offset = 0.0;  // alternative chart: phi -> phi + phase_offset
};

ChartConstants chart_constants(const ClockModel& clock, double hbar = 1.0);

struct DarbouxPoint {
  RealVec q;
  RealVec p;
  RealVec v;
  double rho = 0.0;
  double phi = 0.0;
};

/// q_j = sqrt2 v_j A cos(phi), p_j = (phase_sign / sigma^2) sqrt2 v_j A sin(phi)
/// with A = b sigma sin(sigma rho) (rho for h4). Real charts only.
DarbouxPoint map_F(double rho, double phi, const RealVec& v, const ChartConstants& k);

/// Complex-valued map, also defined on the sigma^2 = -1 branch.
std::pair<Vec, Vec> map_F_complex(double rho, double phi, const RealVec& v, const ChartConstants& k);

/// H_C(rho) = -phase_sign eps A^2 / sigma^2.
double clock_energy(double rho, const ChartConstants& k);
double clock_energy_drho(double rho, const ChartConstants& k);

/// -phase_sign eps sum(q^2 + p^2) / (2 sigma^2): the system symbol in its own chart.
double system_energy(const DarbouxPoint& x, const ChartConstants& k);

struct PullbackCheck {
  double analytic = 0.0;  // hbar b^2 sigma sin(2 sigma rho), or -2 hbar rho for h4
  double numeric = 0.0;   // sum_j hbar (dp_j ^ dq_j) from finite-difference Jacobians of map_F
  double residual = 0.0;
};

/// Coefficient of dphi ^ drho in the pulled-back two-form.
PullbackCheck pullback_two_form(double rho, double phi, const RealVec& v, const ChartConstants& k);

struct Partials {
  double d_rho = 0.0;
  double d_phi = 0.0;
};

/// {f, g} = (f_rho g_phi - f_phi g_rho) / c(rho).
double poisson_bracket_clock(const Partials& f, const Partials& g, double rho, const ChartConstants& k);

using ChartFunction = std::function<double(double rho, double phi)>;
/// Same bracket with five-point finite-difference partials.
double poisson_bracket_clock(const ChartFunction& f, const ChartFunction& g, double rho, double phi,
                             const ChartConstants& k, double h = 1e-4);

struct HamiltonReport {
  double max_analytic = 0.0;  // |{x, H} - (eps/hbar) dx/dphi|, analytic partials
  double max_fd = 0.0;        // finite-difference partials
  double max_shell = 0.0;     // |system_energy(F) - clock_energy|
  int points = 0;
};

/// Hamilton identity for every q_j and p_j over the rho x phi grid.
HamiltonReport hamilton_check(const ChartConstants& k, const RealVec& v, const std::vector<double>& rhos,
                              const std::vector<double>& phis);

/// t per unit phi along the Hamilton flow, dq/dphi / {q, H} = hbar / eps.
double classical_time_rate(const ChartConstants& k, double rho, double phi);

}  // namespace pawclock
