#pragma once

#include <cmath>
#include <span>
#include <type_traits>

namespace pawclock::fd {

/// Second-order central difference of f at x.
// Results are materialized so Eigen expression templates never outlive
// the temporaries returned by f.
template <typename F>
auto central(F&& f, double x, double h) {
  using R = std::decay_t<decltype(f(x))>;
  R out = (f(x + h) - f(x - h)) / (2.0 * h);
  return out;
}

/// Fourth-order five-point central difference of f at x.
template <typename F>
auto five_point(F&& f, double x, double h) {
  using R = std::decay_t<decltype(f(x))>;
  const R a = f(x + 2.0 * h), b = f(x + h), c = f(x - h), d = f(x - 2.0 * h);
  R out = (-a + 8.0 * b - 8.0 * c + d) / (12.0 * h);
  return out;
}

/// Observed order from residuals at steps h and h/2.
inline double richardson_slope(double residual_h, double residual_half) {
  return std::log2(residual_h / residual_half);
}

/// Least-squares slope of log(y) against log(x).
inline double loglog_slope(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double dn = static_cast<double>(n);
  return (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
}

}  // namespace pawclock::fd
