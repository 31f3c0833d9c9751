#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "slr/extended_real.hpp"
#include "slr/measure.hpp"

namespace slr {

/// V(z) = γ + ∫ dσ(t)/(t - z). γ may have either sign.
struct StieltjesLikeFunction {
  SpectralMeasure sigma;
  double gamma = 0.0;
};

/// Square root with the cut on [0, ∞) and Im sqrt(z) > 0 off the cut.
std::complex<double> sqrt_upper(std::complex<double> z);

std::complex<double> eval_V(const StieltjesLikeFunction& f, std::complex<double> z,
                            const quad::Options& opt = {});

ComplexIntegral eval_V_with_error(const StieltjesLikeFunction& f, std::complex<double> z,
                                  const quad::Options& opt = {});

struct AnalyticCheckReport {
  double min_value = 0.0;           ///< smallest tested quantity over the grid
  std::complex<double> argmin{};    ///< grid point where it occurs
  std::size_t points = 0;
  double tolerance = 0.0;
  bool pass = false;
};

/// min Im V(z) over grid points in the upper half-plane.
AnalyticCheckReport check_herglotz(const StieltjesLikeFunction& f,
                                   const std::vector<std::complex<double>>& grid,
                                   double tolerance = 1e-10, const quad::Options& opt = {});

/// min Im[z V(z)] / Im z over grid points in the upper half-plane.
AnalyticCheckReport check_stieltjes(const StieltjesLikeFunction& f,
                                    const std::vector<std::complex<double>>& grid,
                                    double tolerance = 1e-10, const quad::Options& opt = {});

struct Asymptotics {
  double at_minus_infinity = 0.0;  ///< V(-∞) = γ
  ExtendedReal at_zero;            ///< V(-0) = γ + ∫dσ/t
};

Asymptotics asymptotics(const StieltjesLikeFunction& f, const quad::Options& opt = {});

/// Log-polar grid in the upper half-plane: radii geometric over
/// [r_min, r_max] (endpoints included), arguments (j + 1/2)π/n_arg.
std::vector<std::complex<double>> log_polar_grid(std::size_t n_radius = 7, std::size_t n_arg = 7,
                                                 double r_min = 1e-3, double r_max = 1e3);

}  // namespace slr
