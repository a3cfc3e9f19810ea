#include "pawclock/quadrature.hpp"

#include <cmath>
#include <memory>

#include <gsl/gsl_integration.h>

#include "pawclock/kernels.hpp"

namespace pawclock {

namespace {

struct FixedWorkspaceDeleter {
  void operator()(gsl_integration_fixed_workspace* w) const { gsl_integration_fixed_free(w); }
};

NodeSet fixed_rule(const gsl_integration_fixed_type* type, int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("quadrature: need at least one node");
  std::unique_ptr<gsl_integration_fixed_workspace, FixedWorkspaceDeleter> ws(
      gsl_integration_fixed_alloc(type, static_cast<std::size_t>(n), a, b, 0.0, 0.0));
  if (!ws) throw std::runtime_error("quadrature: GSL rule allocation failed");
  NodeSet out{RealVec(n), RealVec(n)};
  const double* x = gsl_integration_fixed_nodes(ws.get());
  const double* w = gsl_integration_fixed_weights(ws.get());
  for (int i = 0; i < n; ++i) {
    out.nodes(i) = x[i];
    out.weights(i) = w[i];
  }
  return out;
}

// Exact coherent-state Fock amplitudes exp(-r^2/2) r^n e^{i n angle} / sqrt(n!),
// evaluated in log space and cut at the representation dimension.
Vec harmonic_amplitudes(int dim, double r, double angle) {
  Vec v(dim);
  for (int n = 0; n < dim; ++n) {
    const double logmag = (r > 0.0 ? n * std::log(r) : (n == 0 ? 0.0 : -INFINITY)) - 0.5 * r * r -
                          0.5 * std::lgamma(n + 1.0);
    v(n) = std::polar(std::exp(logmag), n * angle);
  }
  return v;
}

}  // namespace

NodeSet gauss_legendre(int n, double a, double b) {
  return fixed_rule(gsl_integration_fixed_legendre, n, a, b);
}

NodeSet gauss_laguerre(int n) { return fixed_rule(gsl_integration_fixed_laguerre, n, 0.0, 1.0); }

CoherentQuadrature coherent_quadrature(const LieAlgebraRep& rep, int n_polar, int n_azimuth,
                                       int phase_sign) {
  if (n_polar < 1 || n_azimuth < 1) throw std::invalid_argument("coherent_quadrature: empty grid");
  CoherentQuadrature q;
  q.kind = rep.kind;
  const int total = n_polar * n_azimuth;
  q.rho.reserve(total);
  q.phi.reserve(total);
  q.weights.resize(total);
  const double dphi = 2.0 * pi / n_azimuth;

  if (rep.kind == AlgebraKind::su2) {
    const auto gl = gauss_legendre(n_polar, -1.0, 1.0);
    const double norm = rep.dim / (4.0 * pi);
    std::vector<cplx> params;
    params.reserve(total);
    for (int a = 0; a < n_polar; ++a) {
      const double rho = 0.5 * std::acos(gl.nodes(a));
      for (int b = 0; b < n_azimuth; ++b) {
        const double phi = b * dphi;
        q.weights(static_cast<Eigen::Index>(q.rho.size())) = norm * gl.weights(a) * dphi;
        q.rho.push_back(rho);
        q.phi.push_back(phi);
        params.push_back(std::polar(rho, -phase_sign * phi));
      }
    }
    q.states = kernels::coherent_columns(rep, params);
    return q;
  }

  if (rep.kind == AlgebraKind::h4) {
    // d^2 alpha / pi = (1/2pi) du dangle with u = |alpha|^2; Laguerre absorbs e^{-u}.
    const auto lag = gauss_laguerre(n_polar);
    q.states.resize(rep.dim, total);
    for (int a = 0; a < n_polar; ++a) {
      const double u = lag.nodes(a);
      const double r = std::sqrt(u);
      for (int b = 0; b < n_azimuth; ++b) {
        const double phi = b * dphi;
        const auto idx = static_cast<Eigen::Index>(q.rho.size());
        q.weights(idx) = lag.weights(a) * std::exp(u) / n_azimuth;
        q.states.col(idx) = harmonic_amplitudes(rep.dim, r, -phase_sign * phi);
        q.rho.push_back(r);
        q.phi.push_back(phi);
      }
    }
    return q;
  }

  throw std::invalid_argument("coherent_quadrature: no invariant measure implemented for " +
                              to_string(rep.kind));
}

}  // namespace pawclock
