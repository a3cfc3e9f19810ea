#include "pawclock/phase.hpp"

#include <algorithm>
#include <cmath>

namespace pawclock {

namespace {

int dominant_index(const Vec& v) {
  Eigen::Index idx = 0;
  v.cwiseAbs().maxCoeff(&idx);
  return static_cast<int>(idx);
}

Mat drop_index_pair(const Mat& m, int a, int b) {
  std::vector<int> keep;
  for (int i = 0; i < m.rows(); ++i)
    if (i != a && i != b) keep.push_back(i);
  Mat out(keep.size(), keep.size());
  for (std::size_t r = 0; r < keep.size(); ++r)
    for (std::size_t c = 0; c < keep.size(); ++c) out(r, c) = m(keep[r], keep[c]);
  return out;
}

double spread(const Mat& op, const Vec& v, double& mean) {
  mean = v.dot(op * v).real();
  return (op * v - mean * v).norm();
}

}  // namespace

PhaseOperator build_phase_operator(const ClockModel& clock) {
  const Mat& R = clock.rep.raising_ops[static_cast<std::size_t>(clock.ell)];
  const int n = clock.dim();
  Eigen::SelfAdjointEigenSolver<Mat> es(R * R.adjoint());
  const RealVec& ev = es.eigenvalues();
  const double cut = 1e-12 * std::max(1.0, ev.maxCoeff());

  RealVec inv_sqrt(n);
  int kernel = -1;
  for (int i = 0; i < n; ++i) {
    if (ev(i) > cut) {
      inv_sqrt(i) = 1.0 / std::sqrt(ev(i));
    } else {
      inv_sqrt(i) = 0.0;
      if (kernel >= 0) throw NumericalDomainError("build_phase_operator: R R^+ has a degenerate kernel");
      kernel = i;
    }
  }
  if (kernel < 0) throw NumericalDomainError("build_phase_operator: R R^+ has no kernel to complete");

  PhaseOperator out;
  out.boundary_index = dominant_index(es.eigenvectors().col(kernel));
  out.reference_index = dominant_index(clock.rep.reference_state);

  const Mat pinv_sqrt = es.eigenvectors() * inv_sqrt.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
  Mat U = pinv_sqrt * R;
  U += es.eigenvectors().col(kernel) * clock.rep.reference_state.adjoint();

  // U ~ exp(-i phase_sign phi); for the conjugate convention its adjoint is exp(-i phi).
  out.exp_minus_iphi = clock.phase_sign == 1 ? U : Mat(U.adjoint());
  const Mat& E = out.exp_minus_iphi;
  out.sin_phi = (E.adjoint() - E) / (2.0 * I_unit);
  out.cos_phi = 0.5 * (E + E.adjoint());
  return out;
}

PhaseInvariants phase_invariants(const ClockModel& clock, const PhaseOperator& phase) {
  const Mat& E = phase.exp_minus_iphi;
  const int n = clock.dim();
  PhaseInvariants out;
  out.unitarity = (E.adjoint() * E - Mat::Identity(n, n)).norm();
  out.hermiticity = std::max((phase.sin_phi - phase.sin_phi.adjoint()).norm(),
                             (phase.cos_phi - phase.cos_phi.adjoint()).norm());
  out.sin_cos_commutator = (phase.sin_phi * phase.cos_phi - phase.cos_phi * phase.sin_phi).norm();

  const Mat& R = clock.rep.raising_ops[static_cast<std::size_t>(clock.ell)];
  const Mat U = clock.phase_sign == 1 ? E : Mat(E.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(R * R.adjoint());
  const Mat sqrt_rr = es.eigenvectors() * es.eigenvalues().cwiseMax(0.0).cwiseSqrt().cast<cplx>().asDiagonal() *
                      es.eigenvectors().adjoint();
  Mat diff = R - sqrt_rr * U;
  diff.col(phase.reference_index).setZero();
  out.polar_residual = diff.norm();
  return out;
}

CommutatorReport commutator_check(const ClockModel& clock, const PhaseOperator& phase) {
  const Mat X = clock.H_C * phase.sin_phi - phase.sin_phi * clock.H_C - I_unit * clock.epsilon * phase.cos_phi;
  CommutatorReport out;
  out.full = X.norm();
  out.interior = drop_index_pair(X, phase.reference_index, phase.boundary_index).norm();
  out.full_relative = out.full / (clock.epsilon * std::max(1.0, clock.H_C.norm()));
  return out;
}

UncertaintyAudit uncertainty_audit(const Vec& state, const ClockModel& clock, const PhaseOperator& phase) {
  const Vec v = state / state.norm();
  UncertaintyAudit out;
  double mean_h = 0.0;
  out.delta_H = spread(clock.H_C, v, mean_h);
  out.delta_sin = spread(phase.sin_phi, v, out.mean_sin);
  out.mean_cos = v.dot(phase.cos_phi * v).real();
  out.bound = 0.5 * clock.epsilon * std::abs(out.mean_cos);
  out.slack = out.delta_H * out.delta_sin - out.bound;
  return out;
}

UncertaintyGrid uncertainty_grid(const ClockModel& clock, const PhaseOperator& phase,
                                 const std::vector<double>& rhos, const std::vector<double>& phis) {
  UncertaintyGrid out;
  out.rho = rhos;
  out.phi = phis;
  bool first = true;
  for (double rho : rhos) {
    for (double phi : phis) {
      CoherentState s;
      try {
        s = clock_state(clock, rho, phi);
      } catch (const NumericalDomainError&) {
        ++out.skipped;
        continue;
      }
      const auto a = uncertainty_audit(s.vector, clock, phase);
      out.min_slack = first ? a.slack : std::min(out.min_slack, a.slack);
      first = false;
      out.audits.push_back(a);
    }
  }
  return out;
}

std::vector<SmallAngleCheck> small_angle_checks(const ClockModel& clock, const PhaseOperator& phase,
                                                const std::vector<double>& rhos,
                                                const std::vector<double>& phis) {
  std::vector<SmallAngleCheck> out;
  for (double rho : rhos) {
    for (double phi : phis) {
      if (std::abs(phi) > 0.1) throw std::invalid_argument("small_angle_checks: |phi| must be <= 0.1");
      const auto a = uncertainty_audit(clock_state(clock, rho, phi).vector, clock, phase);
      SmallAngleCheck c;
      c.rho = rho;
      c.phi = phi;
      c.product = a.delta_H * a.delta_sin;
      c.ratio = c.product / (0.5 * clock.epsilon);
      out.push_back(c);
    }
  }
  return out;
}

PhaseExpectationSweep classical_phase_expectations(AlgebraKind algebra, const std::vector<double>& sizes_in,
                                                   double rho, double phi, double h4_fill) {
  if (sizes_in.size() < 3) throw std::invalid_argument("classical_phase_expectations: need at least 3 sizes");
  std::vector<double> sizes = sizes_in;
  std::sort(sizes.begin(), sizes.end());
  PhaseExpectationSweep out;
  for (double size : sizes) {
    const ClockModel clock = build_clock(build_rep(algebra, size));
    const PhaseOperator phase = build_phase_operator(clock);
    const double r = algebra == AlgebraKind::h4 ? std::sqrt(h4_fill * size) : rho;
    const Vec v = clock_state(clock, r, phi).vector;
    PhaseExpectationRecord rec;
    rec.clock_size = size;
    rec.rho = r;
    rec.phi = phi;
    rec.mean_sin = v.dot(phase.sin_phi * v).real();
    rec.mean_cos = v.dot(phase.cos_phi * v).real();
    rec.err_sin = std::abs(rec.mean_sin - std::sin(phi));
    rec.err_cos = std::abs(rec.mean_cos - std::cos(phi));
    out.records.push_back(rec);
  }
  out.sin_decreasing = out.cos_decreasing = true;
  for (std::size_t i = 1; i < out.records.size(); ++i) {
    if (!(out.records[i].err_sin < out.records[i - 1].err_sin)) out.sin_decreasing = false;
    if (!(out.records[i].err_cos < out.records[i - 1].err_cos)) out.cos_decreasing = false;
  }
  return out;
}

}  // namespace pawclock
