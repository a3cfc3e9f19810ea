#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pawclock/types.hpp"

namespace pawclock {

enum class AlgebraKind { su2, h4, su11 };

std::string to_string(AlgebraKind kind);
AlgebraKind parse_algebra(const std::string& name);

// Finite matrix representation of a Lie algebra in a Cartan-type basis.
//
// Raising operators R_m annihilate the reference state; their adjoints
// are the partners R_{-m}. Generators are stored already rescaled so that
// sigma^2 * sum_delta d_{delta l}^2 = 2 for the semisimple algebras.
struct LieAlgebraRep {
  AlgebraKind kind = AlgebraKind::su2;
  int dim = 0;
  double label = 0.0;  // spin j, cutoff n_cut, or Bargmann index k

  std::vector<Mat> diagonal_ops;
  std::vector<Mat> raising_ops;

  // [D_delta, R_m] = structure_d(delta, m) R_m
  Mat structure_d;
  // [R_m, R_m^dagger] = sum_delta adjoint_commutator(delta, m) D_delta.
  // Equal to structure_d for semisimple algebras; differs for h4.
  Mat adjoint_commutator;
  // [R_m, R_m'] = c_{mm'} R_{m+m'}; empty when M = 1.
  std::vector<std::vector<cplx>> structure_c;

  Vec reference_state;
  std::vector<cplx> weights;  // D_delta |G> = g_delta |G>

  bool truncated = false;
  int cutoff = 0;     // n_cut for truncated reps
  int valid_dim = 0;  // leading basis states where relations and states are trusted

  bool semisimple() const { return kind != AlgebraKind::h4; }
  int num_diagonal() const { return static_cast<int>(diagonal_ops.size()); }
  int num_raising() const { return static_cast<int>(raising_ops.size()); }
};

LieAlgebraRep build_su2_rep(double j);
LieAlgebraRep build_h4_rep(int n_cut);
LieAlgebraRep build_su11_rep(double k, int n_cut);

/// Builds the representation named by `kind` from its size parameter
/// (j for su2, n_cut for h4, n_cut with k = 1/2 for su11).
LieAlgebraRep build_rep(AlgebraKind kind, double size, double bargmann_k = 0.5);

struct ClockModel {
  LieAlgebraRep rep;
  int ell = 0;
  cplx sigma{1.0, 0.0};
  int sigma2 = 1;
  double epsilon = 0.0;
  double K = 0.0;
  double b2 = 0.0;
  // lambda = rho * exp(-i * phase_sign * phi). +1 for su2/su11, -1 for h4.
  int phase_sign = 1;
  double energy_scale = 1.0;
  Mat H_C;

  AlgebraKind kind() const { return rep.kind; }
  int dim() const { return rep.dim; }
};

/// Assembles H_C = sigma D_1 + K with K fixed by H_C|G> = 0. When `sigma`
/// is omitted the unit phase making epsilon = sigma d_{1 ell} real and
/// positive is selected. `energy_scale` multiplies H_C (and epsilon).
/// h4 uses H_C = epsilon n with the conjugate phase convention.
ClockModel build_clock(const LieAlgebraRep& rep, int ell = 0,
                       std::optional<cplx> sigma = std::nullopt,
                       double energy_scale = 1.0);

struct RelationResidual {
  std::string relation;
  double full = 0.0;   // relative residual on the whole space
  double valid = 0.0;  // relative residual restricted to the valid subspace
  bool pass_full = false;
  bool pass_valid = false;
};

struct CartanReport {
  std::vector<RelationResidual> relations;
  double tol = 0.0;
  double max_full() const;
  double max_valid() const;
  // Pass means: full-space for non-truncated reps, valid subspace otherwise.
  bool pass(bool truncated) const;
  // Row of the largest full-space residual of [R, R^dagger] (truncation artifact).
  int worst_row = -1;
};

CartanReport verify_cartan(const LieAlgebraRep& rep, double tol);

}  // namespace pawclock
