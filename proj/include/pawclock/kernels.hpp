#pragma once

// Data-parallel inner loops. Each kernel has a plain serial reference
// (kept for tests and the benchmark) and an OpenMP version whose reduction
// order is fixed by a block size independent of the thread count, so the
// parallel results are bit-identical for any number of threads.

#include <vector>

#include "pawclock/algebra.hpp"
#include "pawclock/types.hpp"

namespace pawclock::kernels {

inline constexpr int kReductionBlock = 32;

namespace serial {

/// Column i = displacement of |G> by params[i] (single-mode).
Mat coherent_columns(const LieAlgebraRep& rep, const std::vector<cplx>& params);

/// sum_i weights[i] |states_i><states_i|, accumulated in node order.
Mat accumulate_projectors(const Mat& states, const RealVec& weights);

/// beta(i, k) = (<clock_i| x <system_k|) Psi, with Psi stored as a
/// clock-by-system amplitude matrix.
Mat beta_grid(const Mat& clock_states, const Mat& amplitudes, const Mat& system_states);

}  // namespace serial

namespace omp {

Mat coherent_columns(const LieAlgebraRep& rep, const std::vector<cplx>& params);
Mat accumulate_projectors(const Mat& states, const RealVec& weights);
Mat beta_grid(const Mat& clock_states, const Mat& amplitudes, const Mat& system_states);

}  // namespace omp

using omp::accumulate_projectors;
using omp::beta_grid;
using omp::coherent_columns;

/// Sets the OpenMP worker count (n <= 0 leaves the runtime default).
void set_num_threads(int n);
int max_threads();

}  // namespace pawclock::kernels
