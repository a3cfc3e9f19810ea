#include <doctest.h>

#include <cmath>
#include <random>

#include "pawclock/kernels.hpp"
#include "pawclock/quadrature.hpp"

using namespace pawclock;

namespace {

Mat random_matrix(int rows, int cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g;
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) m(i, k) = cplx{g(rng), g(rng)};
  return m;
}

std::vector<cplx> params(int n) {
  std::vector<cplx> p;
  for (int i = 0; i < n; ++i) p.push_back(std::polar(0.02 * i, 0.37 * i));
  return p;
}

}  // namespace

TEST_CASE("OpenMP kernels agree with the serial reference") {
  const auto rep = build_su2_rep(6.0);
  const auto p = params(70);
  const Mat cs = kernels::serial::coherent_columns(rep, p);
  const Mat co = kernels::omp::coherent_columns(rep, p);
  CHECK((cs - co).norm() < 1e-13);

  RealVec w = RealVec::LinSpaced(70, 0.1, 2.0);
  CHECK((kernels::serial::accumulate_projectors(cs, w) - kernels::omp::accumulate_projectors(cs, w)).norm() < 1e-12);

  const Mat amps = random_matrix(cs.rows(), 9, 3);
  const Mat sys = random_matrix(9, 40, 4);
  const Mat bs = kernels::serial::beta_grid(cs, amps, sys);
  const Mat bo = kernels::omp::beta_grid(cs, amps, sys);
  CHECK((bs - bo).norm() < 1e-12 * bs.norm());
}

TEST_CASE("beta grid is the double partial inner product") {
  const Mat c = random_matrix(4, 3, 5);
  const Mat a = random_matrix(4, 2, 6);
  const Mat s = random_matrix(2, 5, 7);
  const Mat b = kernels::serial::beta_grid(c, a, s);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 5; ++k) {
      cplx direct = 0.0;
      for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 2; ++y) direct += std::conj(c(x, i)) * std::conj(s(y, k)) * a(x, y);
      CHECK(std::abs(b(i, k) - direct) < 1e-13);
    }
}

TEST_CASE("OpenMP reductions are bitwise independent of the thread count") {
  const Mat states = random_matrix(12, 301, 11);
  const RealVec w = RealVec::LinSpaced(301, 0.5, 1.5);
  kernels::set_num_threads(1);
  const Mat one = kernels::omp::accumulate_projectors(states, w);
  const Mat cols1 = kernels::omp::coherent_columns(build_su2_rep(3.0), params(33));
  for (int t : {2, 3, 4}) {
    kernels::set_num_threads(t);
    const Mat many = kernels::omp::accumulate_projectors(states, w);
    CHECK((one - many).cwiseAbs().maxCoeff() == 0.0);
    CHECK((cols1 - kernels::omp::coherent_columns(build_su2_rep(3.0), params(33))).cwiseAbs().maxCoeff() == 0.0);
  }
  kernels::set_num_threads(1);
}

TEST_CASE("Gauss rules integrate polynomials exactly") {
  const auto gl = gauss_legendre(3, -1.0, 1.0);
  double s = 0.0;
  for (int i = 0; i < 3; ++i) s += gl.weights(i) * (std::pow(gl.nodes(i), 5) + gl.nodes(i) * gl.nodes(i));
  CHECK(s == doctest::Approx(2.0 / 3.0).epsilon(1e-14));

  const auto shifted = gauss_legendre(4, 0.0, 2.0);
  double t = 0.0;
  for (int i = 0; i < 4; ++i) t += shifted.weights(i) * std::pow(shifted.nodes(i), 3);
  CHECK(t == doctest::Approx(4.0).epsilon(1e-14));

  const auto lag = gauss_laguerre(2);
  double u = 0.0;
  for (int i = 0; i < 2; ++i) u += lag.weights(i) * std::pow(lag.nodes(i), 3);
  CHECK(u == doctest::Approx(6.0).epsilon(1e-13));
}

TEST_CASE("coherent quadrature weights carry the measure") {
  // su2: weights sum to dim = 2j + 1 (trace of the identity).
  const auto q = coherent_quadrature(build_su2_rep(2.5), 14, 14, 1);
  CHECK(q.size() == 196);
  CHECK(q.weights.sum() == doctest::Approx(6.0).epsilon(1e-12));
  for (int i = 0; i < q.size(); ++i) CHECK(q.states.col(i).norm() == doctest::Approx(1.0).epsilon(1e-12));
}
