#pragma once

#include <vector>

#include "pawclock/algebra.hpp"
#include "pawclock/types.hpp"

namespace pawclock {

struct CoherentState {
  std::vector<cplx> params;  // Omega_1..Omega_M
  Vec vector;
};

// Single-mode clock parameter lambda = rho exp(-i phase_sign phi).
cplx clock_parameter(const ClockModel& clock, double rho, double phi);

/// exp(sum_m Omega_m R_m^+ - Omega_m^* R_m)|G> by dense matrix exponential.
/// Truncated reps reject states whose weight outside the valid subspace
/// exceeds `tail_tol`.
CoherentState displace(const LieAlgebraRep& rep, const std::vector<cplx>& omega,
                       double tail_tol = 1e-10);

/// Unchecked displacement vector; used by the grid kernels.
Vec displace_vector(const LieAlgebraRep& rep, const std::vector<cplx>& omega);

/// Squared norm of `v` on basis states at or beyond rep.valid_dim.
double tail_mass(const LieAlgebraRep& rep, const Vec& v);

/// Clock coherent state |lambda(rho, phi)> via displace().
CoherentState clock_state(const ClockModel& clock, double rho, double phi,
                          double tail_tol = 1e-10);

/// N_rho exp(Lambda R_ell^+)|G> with Lambda = t(rho) exp(-i phase_sign phi),
/// t = tan(rho), tanh(rho) or rho for su2, su11, h4. Rejects rho within
/// `pole_guard` of a pole of tan.
CoherentState coherent_normalized_form(const ClockModel& clock, double rho, double phi,
                                       double pole_guard = 1e-3);

cplx overlap(const CoherentState& a, const CoherentState& b);

/// <state|op|state>.
cplx symbol(const Mat& op, const CoherentState& state);

/// Closed-form clock symbol (eps b^2/2)(cos(2 sigma rho) - 1); cosh branch
/// for sigma^2 = -1, eps rho^2 for h4.
double clock_symbol_analytic(const ClockModel& clock, double rho);

struct QuadratureSpec {
  int n_polar = 0;    // Gauss-Legendre nodes in cos(theta) (su2) or Gauss-Laguerre in |alpha|^2 (h4)
  int n_azimuth = 0;  // uniform nodes in phi
};

struct IdentityResolution {
  double deviation = 0.0;  // Frobenius norm of (sum w |O><O| - I) on the checked block
  int checked_dim = 0;
  int nodes = 0;
};

/// Frobenius deviation of the coherent-state quadrature from the identity.
/// su2: whole space; h4: leading valid_dim block. Other algebras throw.
IdentityResolution identity_resolution_check(const LieAlgebraRep& rep, const QuadratureSpec& quad);

struct PhiDerivativeCheck {
  cplx lhs;            // <lambda|H_C|Omega>
  cplx rhs_h;          // i eps d/dphi <lambda|Omega> by central difference, step h
  cplx rhs_h2;         // same with step h/2
  double residual = 0.0;
  double residual_half = 0.0;
  double slope = 0.0;  // log2(residual / residual_half)
};

/// Checks <lambda|H_C|Omega> = i eps d/dphi <lambda|Omega> at lambda(rho, phi).
PhiDerivativeCheck phi_derivative_identity_check(const ClockModel& clock, double rho, double phi,
                                                 const Vec& omega_ket, double h);

}  // namespace pawclock
