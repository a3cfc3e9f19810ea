#include "pawclock/gcs.hpp"
#include "pawclock/kernels.hpp"

namespace pawclock::kernels::serial {

Mat coherent_columns(const LieAlgebraRep& rep, const std::vector<cplx>& params) {
  Mat out(rep.dim, static_cast<Eigen::Index>(params.size()));
  for (std::size_t i = 0; i < params.size(); ++i)
    out.col(static_cast<Eigen::Index>(i)) = displace_vector(rep, {params[i]});
  return out;
}

Mat accumulate_projectors(const Mat& states, const RealVec& weights) {
  const Eigen::Index n = states.rows();
  Mat acc = Mat::Zero(n, n);
  for (Eigen::Index i = 0; i < states.cols(); ++i) {
    const auto v = states.col(i);
    for (Eigen::Index c = 0; c < n; ++c) {
      const cplx vc = weights(i) * std::conj(v(c));
      for (Eigen::Index r = 0; r < n; ++r) acc(r, c) += v(r) * vc;
    }
  }
  return acc;
}

Mat beta_grid(const Mat& clock_states, const Mat& amplitudes, const Mat& system_states) {
  const Eigen::Index nc = clock_states.cols();
  const Eigen::Index ns = system_states.cols();
  Mat out(nc, ns);
  for (Eigen::Index i = 0; i < nc; ++i)
    for (Eigen::Index k = 0; k < ns; ++k) {
      cplx s = 0.0;
      for (Eigen::Index a = 0; a < amplitudes.rows(); ++a)
        for (Eigen::Index b = 0; b < amplitudes.cols(); ++b)
          s += std::conj(clock_states(a, i)) * std::conj(system_states(b, k)) * amplitudes(a, b);
      out(i, k) = s;
    }
  return out;
}

}  // namespace pawclock::kernels::serial
