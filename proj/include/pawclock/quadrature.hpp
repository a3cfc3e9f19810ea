#pragma once

#include <vector>

#include "pawclock/algebra.hpp"
#include "pawclock/types.hpp"

namespace pawclock {

struct NodeSet {
  RealVec nodes;
  RealVec weights;
};

/// Gauss-Legendre rule on [a, b].
NodeSet gauss_legendre(int n, double a, double b);
/// Gauss-Laguerre rule for weight exp(-x) on [0, inf).
NodeSet gauss_laguerre(int n);

// Discretized invariant measure: sum_i weights[i] |states_i><states_i|
// approximates the identity. rho/phi are the clock coordinates of node i.
struct CoherentQuadrature {
  AlgebraKind kind = AlgebraKind::su2;
  std::vector<double> rho;
  std::vector<double> phi;
  RealVec weights;
  Mat states;  // one normalized coherent state per column

  int size() const { return static_cast<int>(rho.size()); }
};

/// su2: (2j+1)/(4 pi) sin(theta) dtheta dphi with theta = 2 rho, Gauss-Legendre
/// in cos(theta) times a uniform phi grid.
/// h4: d^2 alpha / pi, Gauss-Laguerre in |alpha|^2 times a uniform angle grid.
/// `phase_sign` maps the azimuth onto lambda = rho exp(-i phase_sign phi).
CoherentQuadrature coherent_quadrature(const LieAlgebraRep& rep, int n_polar, int n_azimuth,
                                       int phase_sign);

}  // namespace pawclock
