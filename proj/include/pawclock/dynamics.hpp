#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pawclock/algebra.hpp"
#include "pawclock/constraint.hpp"
#include "pawclock/types.hpp"

namespace pawclock {

// A clock, a system Hamiltonian and a zero-energy entangled state of both.
struct ConstraintSetup {
  ClockModel clock;
  std::optional<ClockModel> system_clock;  // set when the system is a clock-style model
  Mat H_Gamma;
  SpectralPairing pairing;
  CompositeState psi;
};

enum class ProfileKind { gaussian, equal, random };

struct SetupParams {
  double rho_target = 0.6;    // Gaussian profile centred at E_Gamma(rho_target)
  double width_levels = 2.0;  // Gaussian width in units of epsilon
  ProfileKind profile = ProfileKind::gaussian;
  std::uint64_t seed = 0;
  // Explicit system spectrum in units of epsilon; empty means the system is
  // a copy of the clock model (every level resonant).
  std::vector<double> system_levels;
};

ConstraintSetup make_setup(const ClockModel& clock, const SetupParams& params);

struct SchrodingerResidual {
  double residual = 0.0;       // ||i eps D_h phi - H_Gamma phi|| at step h
  double residual_half = 0.0;  // same at h/2
  double slope = 0.0;          // Richardson order estimate
};

/// Emergent Schrodinger equation for the normalized conditional state,
/// central difference in phi.
SchrodingerResidual schrodinger_residual(const ConstraintSetup& s, double rho, double phi, double h);

/// max over phi of ||Phi_rho(phi) - exp(-i H_Gamma phi / eps) Phi_rho(0)||.
double propagator_residual(const ConstraintSetup& s, double rho, const std::vector<double>& phis);

/// max over phi of |chi2(rho, phi) - chi2(rho, phis[0])|.
double chi2_drift(const ConstraintSetup& s, double rho, const std::vector<double>& phis);

/// E_Gamma(rho), the clock symbol.
double energy_of_rho(const ClockModel& clock, double rho);

struct StationaryResidual {
  double absolute = 0.0;  // ||H_Gamma phi - E_Gamma(rho) phi||
  double relative = 0.0;  // absolute / max(|E_Gamma(rho)|, eps)
  double energy = 0.0;
};

StationaryResidual stationary_residual(const ConstraintSetup& s, double rho, double phi);

/// t per unit phi read off the phases of the conditional state (hbar = 1):
/// arg <e|Phi(phi)> - arg <e|Phi(0)> = -E t for each energy component.
double quantum_time_rate(const ConstraintSetup& s, double rho, double phi);

enum class ResidualKind { stationary, schrodinger };

struct ConvergenceRecord {
  double clock_size = 0.0;  // j or n_cut
  int dim = 0;
  double residual = 0.0;
  double oracle_residual = 0.0;  // propagator oracle (schrodinger) or absolute residual (stationary)
  double rho = 0.0;
  double phi = 0.0;
  double h = 0.0;
};

struct SweepParams {
  AlgebraKind algebra = AlgebraKind::su2;
  ResidualKind kind = ResidualKind::stationary;
  SetupParams setup;
  double phi = 0.3;
  double h = 1e-3;
  // h4 only: rho^2 = h4_fill * n_cut so the oscillator clock grows classical.
  double h4_fill = 1.0 / 16.0;
};

struct SweepResult {
  std::vector<ConvergenceRecord> records;  // sorted by clock size
  bool strictly_decreasing = false;
  double loglog_slope = 0.0;
};

SweepResult convergence_sweep(const std::vector<double>& sizes, const SweepParams& params);

}  // namespace pawclock
