#pragma once

#include <cstdint>
#include <vector>

#include "pawclock/algebra.hpp"
#include "pawclock/gcs.hpp"
#include "pawclock/quadrature.hpp"
#include "pawclock/types.hpp"

namespace pawclock {

/// H = H_C (x) I - I (x) H_Gamma, clock index major.
Mat total_hamiltonian(const Mat& H_C, const Mat& H_Gamma);

struct MatchedPair {
  int clock_index = 0;
  int system_index = 0;
  double energy = 0.0;
};

// Eigenbases of both factors and the pairs spanning ker(H).
struct SpectralPairing {
  RealVec clock_energies;
  Mat clock_vectors;
  RealVec system_energies;
  Mat system_vectors;
  std::vector<MatchedPair> pairs;
};

/// All (i, j) with |e_i - f_j| <= tol, ordered lexicographically.
/// An empty pair list is returned as-is.
SpectralPairing match_spectra(const Mat& H_C, const Mat& H_Gamma, double tol = 1e-9);

struct CompositeState {
  Mat amplitudes;  // clock-by-system matrix of Psi
  std::vector<MatchedPair> matched_pairs;
  std::vector<cplx> coefficients;
  double entanglement_entropy = 0.0;  // nats
  bool separable_warning = false;

  int clock_dim() const { return static_cast<int>(amplitudes.rows()); }
  int system_dim() const { return static_cast<int>(amplitudes.cols()); }
  /// Flattened Psi in the clock-major product basis used by total_hamiltonian.
  Vec vector() const;
};

/// Psi = sum_k c_k |E_k>_C (x) |E_k>_Gamma over the matched pairs.
/// Coefficients are normalized here; zero pairs throw.
CompositeState build_psi(const SpectralPairing& pairing, const std::vector<cplx>& coefficients);

/// ||H Psi|| evaluated without forming H on the product space.
double constraint_residual(const CompositeState& psi, const Mat& H_C, const Mat& H_Gamma);

// Coefficient profiles over the matched pairs.
std::vector<cplx> gaussian_profile(const SpectralPairing& pairing, double target_energy, double width);
std::vector<cplx> equal_profile(const SpectralPairing& pairing);
std::vector<cplx> random_profile(const SpectralPairing& pairing, std::uint64_t seed);

inline constexpr double kChi2Threshold = 1e-14;

struct ConditionalState {
  double rho = 0.0;
  double phi = 0.0;
  Vec unnormalized;
  double chi2 = 0.0;
  Vec normalized;  // empty when chi2 is below threshold
  bool supported() const { return normalized.size() > 0; }
};

/// Partial inner product (<lambda| (x) I) Psi with lambda = lambda(rho, phi).
ConditionalState conditional_state(const CompositeState& psi, const ClockModel& clock, double rho,
                                   double phi);

/// Same, against an explicit clock ket.
Vec partial_inner_product(const CompositeState& psi, const Vec& clock_ket);

/// rho_Gamma = Tr_C |Psi><Psi|.
Mat reduced_density_gamma(const CompositeState& psi);
/// rho_C = Tr_Gamma |Psi><Psi|.
Mat reduced_density_clock(const CompositeState& psi);

double von_neumann_entropy(const Mat& rho);

/// ||rho_Gamma - sum_i w_i chi^2(O_i) |phi(O_i)><phi(O_i)||_F over the clock quadrature.
double precs_decomposition_check(const CompositeState& psi, const CoherentQuadrature& clock_quad);

}  // namespace pawclock
