#include "pawclock/constraint.hpp"

#include <cmath>
#include <iostream>
#include <random>

#include <unsupported/Eigen/KroneckerProduct>

#include "pawclock/kernels.hpp"

namespace pawclock {

Mat total_hamiltonian(const Mat& H_C, const Mat& H_Gamma) {
  const Mat ic = Mat::Identity(H_C.rows(), H_C.cols());
  const Mat ig = Mat::Identity(H_Gamma.rows(), H_Gamma.cols());
  return Mat(Eigen::kroneckerProduct(H_C, ig)) - Mat(Eigen::kroneckerProduct(ic, H_Gamma));
}

SpectralPairing match_spectra(const Mat& H_C, const Mat& H_Gamma, double tol) {
  Eigen::SelfAdjointEigenSolver<Mat> ec(H_C);
  Eigen::SelfAdjointEigenSolver<Mat> eg(H_Gamma);
  SpectralPairing out;
  out.clock_energies = ec.eigenvalues();
  out.clock_vectors = ec.eigenvectors();
  out.system_energies = eg.eigenvalues();
  out.system_vectors = eg.eigenvectors();
  for (int i = 0; i < out.clock_energies.size(); ++i)
    for (int j = 0; j < out.system_energies.size(); ++j)
      if (std::abs(out.clock_energies(i) - out.system_energies(j)) <= tol)
        out.pairs.push_back({i, j, 0.5 * (out.clock_energies(i) + out.system_energies(j))});
  return out;
}

Vec CompositeState::vector() const {
  const auto nc = amplitudes.rows();
  const auto ns = amplitudes.cols();
  Vec v(nc * ns);
  for (Eigen::Index a = 0; a < nc; ++a)
    for (Eigen::Index b = 0; b < ns; ++b) v(a * ns + b) = amplitudes(a, b);
  return v;
}

CompositeState build_psi(const SpectralPairing& pairing, const std::vector<cplx>& coefficients) {
  if (pairing.pairs.empty()) throw NumericalDomainError("build_psi: no constraint states (empty kernel)");
  if (coefficients.size() != pairing.pairs.size())
    throw std::invalid_argument("build_psi: one coefficient per matched pair required");
  double norm2 = 0.0;
  for (const auto& c : coefficients) norm2 += std::norm(c);
  if (!(norm2 > 0.0)) throw std::invalid_argument("build_psi: coefficients vanish");
  const double scale = 1.0 / std::sqrt(norm2);

  CompositeState psi;
  psi.amplitudes = Mat::Zero(pairing.clock_vectors.rows(), pairing.system_vectors.rows());
  psi.matched_pairs = pairing.pairs;
  int nonzero = 0;
  for (std::size_t k = 0; k < pairing.pairs.size(); ++k) {
    const cplx c = coefficients[k] * scale;
    psi.coefficients.push_back(c);
    if (std::abs(c) > 0.0) ++nonzero;
    const auto& p = pairing.pairs[k];
    psi.amplitudes += c * pairing.clock_vectors.col(p.clock_index) *
                      pairing.system_vectors.col(p.system_index).transpose();
  }
  psi.separable_warning = nonzero < 2;
  if (psi.separable_warning)
    std::cerr << "warning: constraint state is separable; conditional states will not evolve\n";
  psi.entanglement_entropy = von_neumann_entropy(reduced_density_gamma(psi));
  return psi;
}

double constraint_residual(const CompositeState& psi, const Mat& H_C, const Mat& H_Gamma) {
  return (H_C * psi.amplitudes - psi.amplitudes * H_Gamma.transpose()).norm();
}

std::vector<cplx> gaussian_profile(const SpectralPairing& pairing, double target_energy, double width) {
  if (!(width > 0.0)) throw std::invalid_argument("gaussian_profile: width must be > 0");
  std::vector<cplx> c;
  c.reserve(pairing.pairs.size());
  for (const auto& p : pairing.pairs) {
    const double d = p.energy - target_energy;
    c.emplace_back(std::exp(-d * d / (4.0 * width * width)));
  }
  return c;
}

std::vector<cplx> equal_profile(const SpectralPairing& pairing) {
  return std::vector<cplx>(pairing.pairs.size(), cplx{1.0, 0.0});
}

std::vector<cplx> random_profile(const SpectralPairing& pairing, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<cplx> c;
  c.reserve(pairing.pairs.size());
  for (std::size_t k = 0; k < pairing.pairs.size(); ++k) {
    const double re = g(rng);
    const double im = g(rng);
    c.emplace_back(re, im);
  }
  return c;
}

Vec partial_inner_product(const CompositeState& psi, const Vec& clock_ket) {
  if (clock_ket.size() != psi.amplitudes.rows())
    throw std::invalid_argument("partial_inner_product: clock dimension mismatch");
  return psi.amplitudes.transpose() * clock_ket.conjugate();
}

ConditionalState conditional_state(const CompositeState& psi, const ClockModel& clock, double rho,
                                   double phi) {
  ConditionalState out;
  out.rho = rho;
  out.phi = phi;
  out.unnormalized = partial_inner_product(psi, clock_state(clock, rho, phi).vector);
  out.chi2 = out.unnormalized.squaredNorm();
  if (out.chi2 >= kChi2Threshold) out.normalized = out.unnormalized / std::sqrt(out.chi2);
  return out;
}

Mat reduced_density_gamma(const CompositeState& psi) {
  return psi.amplitudes.transpose() * psi.amplitudes.conjugate();
}

Mat reduced_density_clock(const CompositeState& psi) {
  return psi.amplitudes * psi.amplitudes.adjoint();
}

double von_neumann_entropy(const Mat& rho) {
  Eigen::SelfAdjointEigenSolver<Mat> es(rho, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const double p = es.eigenvalues()(i);
    if (p > 1e-300) s -= p * std::log(p);
  }
  return std::max(0.0, s);
}

double precs_decomposition_check(const CompositeState& psi, const CoherentQuadrature& clock_quad) {
  if (clock_quad.states.rows() != psi.amplitudes.rows())
    throw std::invalid_argument("precs_decomposition_check: quadrature built for a different clock");
  // Columns are the unnormalized conditional states Phi(O_i) = chi(O_i) |phi(O_i)>.
  const Mat conditionals = psi.amplitudes.transpose() * clock_quad.states.conjugate();
  const Mat rebuilt = kernels::accumulate_projectors(conditionals, clock_quad.weights);
  return (reduced_density_gamma(psi) - rebuilt).norm();
}

}  // namespace pawclock
