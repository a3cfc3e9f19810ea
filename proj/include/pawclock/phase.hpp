#pragma once

#include <vector>

#include "pawclock/algebra.hpp"
#include "pawclock/gcs.hpp"
#include "pawclock/types.hpp"

namespace pawclock {

// exp(-i phi) from the polar decomposition R = (R R^+)^{1/2} U. On a finite
// ladder U is a partial isometry; the missing direction (reference state to
// boundary state) is filled in cyclically.
struct PhaseOperator {
  Mat exp_minus_iphi;
  Mat sin_phi;
  Mat cos_phi;
  int boundary_index = -1;  // basis state annihilated by R^+ (top of the ladder)
  int reference_index = 0;  // basis state annihilated by R
};

PhaseOperator build_phase_operator(const ClockModel& clock);

struct PhaseInvariants {
  double unitarity = 0.0;         // ||E^+ E - I||
  double hermiticity = 0.0;       // max of ||S - S^+||, ||C - C^+||
  double sin_cos_commutator = 0.0;
  double polar_residual = 0.0;    // ||R - (R R^+)^{1/2} U|| off the reference column
};

PhaseInvariants phase_invariants(const ClockModel& clock, const PhaseOperator& phase);

struct CommutatorReport {
  double interior = 0.0;  // ||[H_C, sin] - i eps cos|| without the two extremal states
  double full = 0.0;
  double full_relative = 0.0;  // full / (eps * ||H_C||)
};

CommutatorReport commutator_check(const ClockModel& clock, const PhaseOperator& phase);

struct UncertaintyAudit {
  double delta_H = 0.0;
  double delta_sin = 0.0;
  double bound = 0.0;  // (eps/2)|<cos>|
  double slack = 0.0;  // delta_H * delta_sin - bound
  double mean_sin = 0.0;
  double mean_cos = 0.0;
};

UncertaintyAudit uncertainty_audit(const Vec& state, const ClockModel& clock, const PhaseOperator& phase);

struct UncertaintyGrid {
  std::vector<double> rho;
  std::vector<double> phi;
  std::vector<UncertaintyAudit> audits;  // rho-major
  double min_slack = 0.0;
  int skipped = 0;  // points rejected by the tail guard
};

/// Audits every (rho, phi) point whose coherent state passes the tail guard.
UncertaintyGrid uncertainty_grid(const ClockModel& clock, const PhaseOperator& phase,
                                 const std::vector<double>& rhos, const std::vector<double>& phis);

struct SmallAngleCheck {
  double rho = 0.0;
  double phi = 0.0;
  double product = 0.0;  // delta_H * delta_sin
  double ratio = 0.0;    // product / (eps/2)
};

/// Delta H * Delta phi against eps/2 with Delta phi read as Delta sin(phi).
std::vector<SmallAngleCheck> small_angle_checks(const ClockModel& clock, const PhaseOperator& phase,
                                                const std::vector<double>& rhos,
                                                const std::vector<double>& phis);

struct PhaseExpectationRecord {
  double clock_size = 0.0;
  double rho = 0.0;
  double phi = 0.0;
  double mean_sin = 0.0;
  double mean_cos = 0.0;
  double err_sin = 0.0;
  double err_cos = 0.0;
};

struct PhaseExpectationSweep {
  std::vector<PhaseExpectationRecord> records;
  bool sin_decreasing = false;
  bool cos_decreasing = false;
};

/// |<lambda|sin|lambda> - sin(phi)| and the cosine analogue over clock sizes.
/// For h4, rho^2 = h4_fill * n_cut (a fixed rho has no classical limit in n_cut).
PhaseExpectationSweep classical_phase_expectations(AlgebraKind algebra, const std::vector<double>& sizes,
                                                   double rho, double phi, double h4_fill = 1.0 / 16.0);

}  // namespace pawclock
