#include "slr/stieltjes.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "slr/error.hpp"

namespace slr {

namespace {

constexpr const char* kModule = "stieltjes";

void require_upper_half_plane(const std::vector<std::complex<double>>& grid) {
  for (const auto& z : grid) {
    if (!(z.imag() > 0.0)) {
      throw Error(ErrorKind::InvalidArgument, kModule, "check grid points need Im z > 0");
    }
  }
}

template <class Quantity>
AnalyticCheckReport run_check(const std::vector<std::complex<double>>& grid, double tolerance,
                              const Quantity& quantity) {
  require_upper_half_plane(grid);
  AnalyticCheckReport report;
  report.tolerance = tolerance;
  report.points = grid.size();
  report.min_value = std::numeric_limits<double>::infinity();
  for (const auto& z : grid) {
    const double q = quantity(z);
    if (q < report.min_value) {
      report.min_value = q;
      report.argmin = z;
    }
  }
  report.pass = grid.empty() || report.min_value >= -tolerance;
  return report;
}

}  // namespace

std::complex<double> sqrt_upper(std::complex<double> z) {
  return std::complex<double>(0.0, 1.0) * std::sqrt(-z);
}

ComplexIntegral eval_V_with_error(const StieltjesLikeFunction& f, std::complex<double> z,
                                  const quad::Options& opt) {
  auto r = integrate_weighted(f.sigma, Resolvent{z}, opt);
  r.value += f.gamma;
  return r;
}

std::complex<double> eval_V(const StieltjesLikeFunction& f, std::complex<double> z,
                            const quad::Options& opt) {
  return eval_V_with_error(f, z, opt).value;
}

AnalyticCheckReport check_herglotz(const StieltjesLikeFunction& f,
                                   const std::vector<std::complex<double>>& grid,
                                   double tolerance, const quad::Options& opt) {
  return run_check(grid, tolerance, [&](std::complex<double> z) { return eval_V(f, z, opt).imag(); });
}

AnalyticCheckReport check_stieltjes(const StieltjesLikeFunction& f,
                                    const std::vector<std::complex<double>>& grid,
                                    double tolerance, const quad::Options& opt) {
  return run_check(grid, tolerance, [&](std::complex<double> z) {
    return (z * eval_V(f, z, opt)).imag() / z.imag();
  });
}

Asymptotics asymptotics(const StieltjesLikeFunction& f, const quad::Options& opt) {
  const auto b = integrate_weighted(f.sigma, RealKernel::InvT, opt);
  Asymptotics out;
  out.at_minus_infinity = f.gamma;
  out.at_zero = b.value.is_infinite() ? ExtendedReal::infinity()
                                      : ExtendedReal(f.gamma + b.value.value());
  return out;
}

std::vector<std::complex<double>> log_polar_grid(std::size_t n_radius, std::size_t n_arg,
                                                 double r_min, double r_max) {
  std::vector<std::complex<double>> grid;
  grid.reserve(n_radius * n_arg);
  const double log_lo = std::log(r_min);
  const double log_hi = std::log(r_max);
  for (std::size_t i = 0; i < n_radius; ++i) {
    const double frac =
        n_radius == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n_radius - 1);
    const double r = std::exp(log_lo + frac * (log_hi - log_lo));
    for (std::size_t j = 0; j < n_arg; ++j) {
      const double phi = std::numbers::pi * (static_cast<double>(j) + 0.5) / static_cast<double>(n_arg);
      grid.push_back(std::polar(r, phi));
    }
  }
  return grid;
}

}  // namespace slr
