#include <omp.h>

#include "pawclock/gcs.hpp"
#include "pawclock/kernels.hpp"

namespace pawclock::kernels {

void set_num_threads(int n) {
  if (n > 0) omp_set_num_threads(n);
}

int max_threads() { return omp_get_max_threads(); }

namespace omp {

Mat coherent_columns(const LieAlgebraRep& rep, const std::vector<cplx>& params) {
  const auto n = static_cast<long>(params.size());
  Mat out(rep.dim, n);
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) out.col(i) = displace_vector(rep, {params[static_cast<std::size_t>(i)]});
  return out;
}

Mat accumulate_projectors(const Mat& states, const RealVec& weights) {
  const Eigen::Index n = states.rows();
  const long nodes = static_cast<long>(states.cols());
  const long nblocks = (nodes + kReductionBlock - 1) / kReductionBlock;
  std::vector<Mat> partial(static_cast<std::size_t>(nblocks));

#pragma omp parallel for schedule(static)
  for (long b = 0; b < nblocks; ++b) {
    const long begin = b * kReductionBlock;
    const long len = std::min<long>(kReductionBlock, nodes - begin);
    const Mat block = states.middleCols(begin, len);
    const Mat scaled = block * weights.segment(begin, len).asDiagonal();
    partial[static_cast<std::size_t>(b)].noalias() = scaled * block.adjoint();
  }

  Mat acc = Mat::Zero(n, n);
  for (const auto& p : partial) acc += p;
  return acc;
}

Mat beta_grid(const Mat& clock_states, const Mat& amplitudes, const Mat& system_states) {
  // beta = C^+ Psi conj(S); rows are independent.
  const Mat left = clock_states.adjoint() * amplitudes;
  const Mat right = system_states.conjugate();
  const long nc = static_cast<long>(left.rows());
  Mat out(nc, system_states.cols());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < nc; ++i) out.row(i) = left.row(i) * right;
  return out;
}

}  // namespace omp
}  // namespace pawclock::kernels
