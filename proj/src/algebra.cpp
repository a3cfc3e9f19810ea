#include "pawclock/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace pawclock {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

// Relative residual ||X||_F / max(1, scale), optionally restricted to the
// first `cols` columns (right projection onto the leading subspace). State
// relations (single column) are already inside that subspace.
double rel_norm(const Mat& x, double scale, int cols = -1) {
  const bool whole = cols < 0 || x.cols() == 1 || cols >= x.cols();
  const double n = whole ? x.norm() : x.leftCols(cols).norm();
  return n / std::max(1.0, scale);
}

}  // namespace

std::string to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::su2: return "su2";
    case AlgebraKind::h4: return "h4";
    case AlgebraKind::su11: return "su11";
  }
  return "?";
}

AlgebraKind parse_algebra(const std::string& name) {
  if (name == "su2") return AlgebraKind::su2;
  if (name == "h4") return AlgebraKind::h4;
  if (name == "su11") return AlgebraKind::su11;
  throw std::invalid_argument("unknown algebra '" + name + "' (expected su2, h4, su11)");
}

LieAlgebraRep build_su2_rep(double j) {
  const double twoj = 2.0 * j;
  if (!(j > 0.0) || std::abs(twoj - std::round(twoj)) > 1e-12)
    throw std::invalid_argument("su2: spin j must be a positive half-integer");
  const int n = static_cast<int>(std::lround(twoj)) + 1;

  // Basis |k>, k = m + j = 0..2j; the lowest weight |j,-j> is k = 0.
  Mat sz = Mat::Zero(n, n);
  Mat sminus = Mat::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const double m = k - j;
    sz(k, k) = m;
    if (k > 0) sminus(k - 1, k) = std::sqrt(j * (j + 1.0) - m * (m - 1.0));
  }

  LieAlgebraRep rep;
  rep.kind = AlgebraKind::su2;
  rep.dim = n;
  rep.label = j;
  // D_1 = -sqrt2 S_z, R_1 = S^-: [D_1, R_1] = sqrt2 R_1, [R_1, R_1^+] = sqrt2 D_1.
  rep.diagonal_ops = {-kSqrt2 * sz};
  rep.raising_ops = {sminus};
  rep.structure_d = Mat::Constant(1, 1, kSqrt2);
  rep.adjoint_commutator = rep.structure_d;
  rep.reference_state = Vec::Unit(n, 0);
  rep.weights = {kSqrt2 * j};
  rep.truncated = false;
  rep.valid_dim = n;
  return rep;
}

LieAlgebraRep build_h4_rep(int n_cut) {
  if (n_cut < 2) throw std::invalid_argument("h4: n_cut must be >= 2");
  const int n = n_cut + 1;
  Mat a = Mat::Zero(n, n);
  Mat num = Mat::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    num(k, k) = k;
    if (k > 0) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  }

  LieAlgebraRep rep;
  rep.kind = AlgebraKind::h4;
  rep.dim = n;
  rep.label = n_cut;
  rep.diagonal_ops = {num, Mat::Identity(n, n)};
  rep.raising_ops = {a};
  rep.structure_d = Mat(2, 1);
  rep.structure_d << -1.0, 0.0;
  rep.adjoint_commutator = Mat(2, 1);
  rep.adjoint_commutator << 0.0, 1.0;
  rep.reference_state = Vec::Unit(n, 0);
  rep.weights = {0.0, 1.0};
  rep.truncated = true;
  rep.cutoff = n_cut;
  rep.valid_dim = std::max(1, n_cut / 2);
  return rep;
}

LieAlgebraRep build_su11_rep(double k, int n_cut) {
  if (!(k > 0.0)) throw std::invalid_argument("su11: Bargmann index k must be > 0");
  if (n_cut < 2) throw std::invalid_argument("su11: n_cut must be >= 2");
  const int n = n_cut + 1;
  Mat k0 = Mat::Zero(n, n);
  Mat kminus = Mat::Zero(n, n);
  for (int m = 0; m < n; ++m) {
    k0(m, m) = k + m;
    if (m > 0) kminus(m - 1, m) = std::sqrt(m * (m - 1.0 + 2.0 * k));
  }

  // D_1 = i sqrt2 K0, R_1 = K^-: d = -i sqrt2, sigma = i gives epsilon = sqrt2.
  LieAlgebraRep rep;
  rep.kind = AlgebraKind::su11;
  rep.dim = n;
  rep.label = k;
  rep.diagonal_ops = {I_unit * kSqrt2 * k0};
  rep.raising_ops = {kminus};
  rep.structure_d = Mat::Constant(1, 1, -I_unit * kSqrt2);
  rep.adjoint_commutator = rep.structure_d;
  rep.reference_state = Vec::Unit(n, 0);
  rep.weights = {I_unit * kSqrt2 * k};
  rep.truncated = true;
  rep.cutoff = n_cut;
  rep.valid_dim = std::max(1, n_cut / 2);
  return rep;
}

LieAlgebraRep build_rep(AlgebraKind kind, double size, double bargmann_k) {
  switch (kind) {
    case AlgebraKind::su2: return build_su2_rep(size);
    case AlgebraKind::h4: return build_h4_rep(static_cast<int>(std::lround(size)));
    case AlgebraKind::su11: return build_su11_rep(bargmann_k, static_cast<int>(std::lround(size)));
  }
  throw std::invalid_argument("unknown algebra");
}

ClockModel build_clock(const LieAlgebraRep& rep, int ell, std::optional<cplx> sigma,
                       double energy_scale) {
  if (ell < 0 || ell >= rep.num_raising())
    throw std::invalid_argument("build_clock: raising index out of range");
  if (!(energy_scale > 0.0)) throw std::invalid_argument("build_clock: energy_scale must be > 0");

  ClockModel clock;
  clock.rep = rep;
  clock.ell = ell;
  clock.energy_scale = energy_scale;
  const int n = rep.dim;

  if (rep.kind == AlgebraKind::h4) {
    // H_C = epsilon n, reference |0> has zero energy, conjugate phase convention.
    clock.sigma = 1.0;
    clock.sigma2 = 1;
    clock.epsilon = energy_scale;
    clock.K = 0.0;
    cplx gd = 0.0;
    for (int d = 0; d < rep.num_diagonal(); ++d) gd += rep.weights[d] * rep.structure_d(d, ell);
    clock.b2 = gd.real();
    clock.phase_sign = -1;
    clock.H_C = energy_scale * rep.diagonal_ops[0];
  } else {
    const cplx d1 = rep.structure_d(0, ell);
    if (std::abs(d1) == 0.0) throw std::invalid_argument("build_clock: d_{1 ell} vanishes");
    const cplx s = sigma ? *sigma : std::conj(d1) / std::abs(d1);
    const cplx s2 = s * s;
    if (std::abs(std::abs(s2.real()) - 1.0) > 1e-12 || std::abs(s2.imag()) > 1e-12)
      throw std::invalid_argument("build_clock: sigma^2 must be +1 or -1");
    const cplx eps = s * d1;
    if (std::abs(eps.imag()) > 1e-12 || !(eps.real() > 0.0))
      throw std::invalid_argument("build_clock: epsilon = sigma d_{1 ell} is not real and positive");
    const cplx K = -s * rep.weights[0];
    if (std::abs(K.imag()) > 1e-12)
      throw std::invalid_argument("build_clock: reference energy offset is not real");
    cplx gd = 0.0;
    for (int d = 0; d < rep.num_diagonal(); ++d) gd += rep.weights[d] * rep.structure_d(d, ell);
    const cplx b2 = gd / s2;

    clock.sigma = s;
    clock.sigma2 = s2.real() > 0 ? 1 : -1;
    clock.epsilon = energy_scale * eps.real();
    clock.K = energy_scale * K.real();
    clock.b2 = b2.real();
    clock.phase_sign = 1;
    clock.H_C = energy_scale * (s * rep.diagonal_ops[0] + K.real() * Mat::Identity(n, n));
  }

  const double herm = (clock.H_C - clock.H_C.adjoint()).norm();
  if (herm > 1e-10 * std::max(1.0, clock.H_C.norm()))
    throw std::runtime_error("build_clock: H_C is not hermitian");
  const double ground = (clock.H_C * rep.reference_state).norm();
  if (ground > 1e-10 * std::max(1.0, clock.H_C.norm()))
    throw std::runtime_error("build_clock: H_C|G> != 0");
  return clock;
}

double CartanReport::max_full() const {
  double m = 0.0;
  for (const auto& r : relations) m = std::max(m, r.full);
  return m;
}

double CartanReport::max_valid() const {
  double m = 0.0;
  for (const auto& r : relations) m = std::max(m, r.valid);
  return m;
}

bool CartanReport::pass(bool truncated) const {
  return truncated ? max_valid() <= tol : max_full() <= tol;
}

CartanReport verify_cartan(const LieAlgebraRep& rep, double tol) {
  CartanReport report;
  report.tol = tol;
  const int nd = rep.num_diagonal();
  const int nr = rep.num_raising();
  const int vd = rep.valid_dim;

  auto add = [&](std::string name, const Mat& x, double scale) {
    RelationResidual r;
    r.relation = std::move(name);
    r.full = rel_norm(x, scale);
    r.valid = rel_norm(x, scale, vd);
    r.pass_full = r.full <= tol;
    r.pass_valid = r.valid <= tol;
    report.relations.push_back(r);
  };

  for (int a = 0; a < nd; ++a)
    for (int b = a + 1; b < nd; ++b) {
      const auto& da = rep.diagonal_ops[a];
      const auto& db = rep.diagonal_ops[b];
      add("[D" + std::to_string(a + 1) + ",D" + std::to_string(b + 1) + "]", commutator(da, db),
          da.norm() * db.norm());
    }

  for (int d = 0; d < nd; ++d)
    for (int m = 0; m < nr; ++m) {
      const auto& D = rep.diagonal_ops[d];
      const auto& R = rep.raising_ops[m];
      add("[D" + std::to_string(d + 1) + ",R" + std::to_string(m + 1) + "]-dR",
          commutator(D, R) - rep.structure_d(d, m) * R, D.norm() * R.norm());
    }

  for (int m = 0; m < nr; ++m) {
    const auto& R = rep.raising_ops[m];
    Mat rhs = Mat::Zero(rep.dim, rep.dim);
    for (int d = 0; d < nd; ++d) rhs += rep.adjoint_commutator(d, m) * rep.diagonal_ops[d];
    const Mat x = commutator(R, R.adjoint()) - rhs;
    add("[R" + std::to_string(m + 1) + ",R" + std::to_string(m + 1) + "^+]-sum dD", x,
        R.norm() * R.norm());
    if (m == 0) {
      Eigen::Index row = 0;
      x.rowwise().norm().maxCoeff(&row);
      report.worst_row = static_cast<int>(row);
    }
  }

  for (int m = 0; m < nr; ++m) {
    const auto& R = rep.raising_ops[m];
    add("R" + std::to_string(m + 1) + "|G>", R * rep.reference_state, R.norm());
  }
  for (int d = 0; d < nd; ++d) {
    const auto& D = rep.diagonal_ops[d];
    add("D" + std::to_string(d + 1) + "|G>-g|G>",
        D * rep.reference_state - rep.weights[d] * rep.reference_state, D.norm());
  }
  if (rep.semisimple()) {
    // sigma^2 sum_delta d_{delta 1}^2 = 2, with sigma the unit phase making sigma d real.
    const cplx d1 = rep.structure_d(0, 0);
    const cplx s = std::conj(d1) / std::abs(d1);
    cplx sum = 0.0;
    for (int d = 0; d < nd; ++d) sum += rep.structure_d(d, 0) * rep.structure_d(d, 0);
    const double dev = std::abs(s * s * sum - 2.0);
    RelationResidual r{"sigma^2 sum d^2 = 2", dev, dev, dev <= tol, dev <= tol};
    report.relations.push_back(r);
  }
  return report;
}

}  // namespace pawclock
