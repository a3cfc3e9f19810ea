#include "pawclock/gcs.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "pawclock/kernels.hpp"
#include "pawclock/quadrature.hpp"

namespace pawclock {

cplx clock_parameter(const ClockModel& clock, double rho, double phi) {
  return std::polar(rho, -clock.phase_sign * phi);
}

Vec displace_vector(const LieAlgebraRep& rep, const std::vector<cplx>& omega) {
  if (static_cast<int>(omega.size()) > rep.num_raising())
    throw std::invalid_argument("displace: more parameters than raising operators");
  Mat gen = Mat::Zero(rep.dim, rep.dim);
  bool zero = true;
  for (std::size_t m = 0; m < omega.size(); ++m) {
    if (omega[m] == cplx{}) continue;
    zero = false;
    const Mat& R = rep.raising_ops[m];
    gen += omega[m] * R.adjoint() - std::conj(omega[m]) * R;
  }
  if (zero) return rep.reference_state;
  return gen.exp() * rep.reference_state;
}

double tail_mass(const LieAlgebraRep& rep, const Vec& v) {
  if (rep.valid_dim >= rep.dim) return 0.0;
  return v.tail(rep.dim - rep.valid_dim).squaredNorm();
}

CoherentState displace(const LieAlgebraRep& rep, const std::vector<cplx>& omega,
                       double tail_tol) {
  CoherentState s{omega, displace_vector(rep, omega)};
  if (rep.truncated) {
    const double tail = tail_mass(rep, s.vector);
    if (tail > tail_tol)
      throw NumericalDomainError("displace: coherent state leaks outside the valid subspace (tail mass " +
                                 std::to_string(tail) + ")");
  }
  return s;
}

CoherentState clock_state(const ClockModel& clock, double rho, double phi, double tail_tol) {
  return displace(clock.rep, {clock_parameter(clock, rho, phi)}, tail_tol);
}

CoherentState coherent_normalized_form(const ClockModel& clock, double rho, double phi,
                                       double pole_guard) {
  double t = rho;
  if (clock.kind() != AlgebraKind::h4) {
    if (clock.sigma2 == 1) {
      const double dist = std::abs(std::remainder(rho - pi / 2.0, pi));
      if (dist <= pole_guard)
        throw NumericalDomainError("coherent_normalized_form: rho too close to a pole of tan");
      t = std::tan(rho);
    } else {
      t = std::tanh(rho);
    }
  }
  const cplx lambda_big = std::polar(1.0, -clock.phase_sign * phi) * t;
  const Mat& R = clock.rep.raising_ops[static_cast<std::size_t>(clock.ell)];
  // R^+ is nilpotent (su2) or truncated, so the exponential series terminates;
  // term n sits on the n-th ladder state, so the sum has no cancellation.
  const Mat Rd = R.adjoint();
  Vec term = clock.rep.reference_state;
  Vec v = term;
  for (int n = 1; n < clock.dim(); ++n) {
    term = (lambda_big / static_cast<double>(n)) * (Rd * term);
    if (term.squaredNorm() == 0.0) break;
    v += term;
  }
  v /= v.norm();
  return CoherentState{{clock_parameter(clock, rho, phi)}, v};
}

cplx overlap(const CoherentState& a, const CoherentState& b) {
  if (a.vector.size() != b.vector.size()) throw std::invalid_argument("overlap: dimension mismatch");
  return a.vector.dot(b.vector);
}

cplx symbol(const Mat& op, const CoherentState& state) {
  if (op.rows() != op.cols() || op.rows() != state.vector.size())
    throw std::invalid_argument("symbol: operator/state dimension mismatch");
  return state.vector.dot(op * state.vector);
}

double clock_symbol_analytic(const ClockModel& clock, double rho) {
  if (clock.kind() == AlgebraKind::h4) return clock.epsilon * rho * rho;
  const double c = clock.sigma2 == 1 ? std::cos(2.0 * rho) : std::cosh(2.0 * rho);
  return 0.5 * clock.epsilon * clock.b2 * (c - 1.0);
}

IdentityResolution identity_resolution_check(const LieAlgebraRep& rep, const QuadratureSpec& quad) {
  if (rep.kind == AlgebraKind::su11)
    throw std::invalid_argument("identity_resolution_check: no quadrature measure for su11");
  const auto q = coherent_quadrature(rep, quad.n_polar, quad.n_azimuth, rep.kind == AlgebraKind::h4 ? -1 : 1);
  const Mat acc = kernels::accumulate_projectors(q.states, q.weights);
  IdentityResolution out;
  out.checked_dim = rep.kind == AlgebraKind::h4 ? rep.valid_dim : rep.dim;
  out.nodes = q.size();
  const int n = out.checked_dim;
  out.deviation = (acc.topLeftCorner(n, n) - Mat::Identity(n, n)).norm();
  return out;
}

PhiDerivativeCheck phi_derivative_identity_check(const ClockModel& clock, double rho, double phi,
                                                 const Vec& omega_ket, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("phi_derivative_identity_check: step must be > 0");
  auto bra = [&](double ph) { return clock_state(clock, rho, ph, 1.0).vector; };
  auto amp = [&](double ph) { return bra(ph).dot(omega_ket); };
  auto central = [&](double step) {
    return I_unit * clock.epsilon * (amp(phi + step) - amp(phi - step)) / (2.0 * step);
  };

  PhiDerivativeCheck out;
  out.lhs = bra(phi).dot(clock.H_C * omega_ket);
  out.rhs_h = central(h);
  out.rhs_h2 = central(0.5 * h);
  out.residual = std::abs(out.lhs - out.rhs_h);
  out.residual_half = std::abs(out.lhs - out.rhs_h2);
  out.slope = std::log2(out.residual / out.residual_half);
  return out;
}

}  // namespace pawclock
