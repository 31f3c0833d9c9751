#pragma once

// Reference integrals computed independently of slr::quad: Boost.Math
// double-exponential quadrature on the real and imaginary parts.

#include <cmath>
#include <complex>
#include <numbers>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace slr::oracle {

/// ∫_lo^∞ f(t) dt for complex-valued f.
template <class F>
std::complex<double> half_line(const F& f, double lo) {
  boost::math::quadrature::exp_sinh<double> integrator;
  const double tol = 1e-14;
  const double re = integrator.integrate([&](double t) { return f(t).real(); }, lo,
                                         std::numeric_limits<double>::infinity(), tol);
  const double im = integrator.integrate([&](double t) { return f(t).imag(); }, lo,
                                         std::numeric_limits<double>::infinity(), tol);
  return {re, im};
}

/// ∫_lo^hi f(t) dt for complex-valued f.
template <class F>
std::complex<double> interval(const F& f, double lo, double hi) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  const double tol = 1e-14;
  const double re = integrator.integrate([&](double t) { return f(t).real(); }, lo, hi, tol);
  const double im = integrator.integrate([&](double t) { return f(t).imag(); }, lo, hi, tol);
  return {re, im};
}

/// ∫_0^∞ dt / (π sqrt(t) (t - z)) via t = u², i.e. ∫_0^∞ 2 du / (π (u² - z)).
inline std::complex<double> inverse_sqrt_stieltjes(std::complex<double> z) {
  return half_line(
      [z](double u) { return 2.0 / (std::numbers::pi * (std::complex<double>(u * u) - z)); }, 0.0);
}

/// Brute-force tail integral ∫_T^∞ c t^(-s) / (t - z) dt via t = T/u on
/// geometrically graded panels in u ∈ (0, 1], with a fixed 20-point
/// Gauss–Legendre rule per panel. Panels stop at u = 2^-k_max; the neglected
/// piece is bounded by c T^(1-s) ∫_0^{u_min} u^(s-2) |u/T| ... ≈ O(u_min^s).
inline std::complex<double> graded_tail(double T, double c, double s, std::complex<double> z,
                                        int k_max = 200) {
  // 20-point rule nodes/weights on [-1, 1] via Newton iteration.
  constexpr int n = 20;
  double nodes[n];
  double weights[n];
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      const double dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) {
        double q0 = 1.0, q1 = x;
        for (int k = 2; k <= n; ++k) {
          const double qk = ((2.0 * k - 1.0) * x * q1 - (k - 1.0) * q0) / k;
          q0 = q1;
          q1 = qk;
        }
        const double dq = n * (x * q1 - q0) / (x * x - 1.0);
        weights[i] = 2.0 / ((1.0 - x * x) * dq * dq);
        break;
      }
    }
    nodes[i] = x;
  }
  auto integrand = [&](double u) {
    const double t = T / u;
    return c * std::pow(t, -s) / (t - z) * (T / (u * u));
  };
  std::complex<double> sum{};
  for (int k = 0; k < k_max; ++k) {
    const double hi = std::ldexp(1.0, -k);
    const double lo = hi / 2.0;
    // fine uniform split so a pole close to the axis is resolved
    constexpr int split = 256;
    for (int j = 0; j < split; ++j) {
      const double a = lo + (hi - lo) * j / split;
      const double b = lo + (hi - lo) * (j + 1) / split;
      const double half = 0.5 * (b - a);
      const double mid = 0.5 * (a + b);
      for (int i = 0; i < n; ++i) sum += weights[i] * half * integrand(mid + half * nodes[i]);
    }
  }
  return sum;
}

}  // namespace slr::oracle
