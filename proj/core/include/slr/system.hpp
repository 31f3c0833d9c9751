#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "slr/extended_real.hpp"
#include "slr/measure.hpp"
#include "slr/stieltjes.hpp"
#include "slr/weyl.hpp"

namespace slr {

/// λ ↦ m∞(λ), either closed form or backed by a WeylEvaluator.
using WeylFunction = std::function<std::complex<double>(std::complex<double>)>;

WeylFunction weyl_function(const WeylEvaluator& evaluator);
WeylFunction weyl_function_constant(double v);

/// Scalar content of the realizing rigged canonical system.
struct SystemParams {
  std::complex<double> h;
  ExtendedReal mu;
  WeylFunction weyl;
  double theta_expected = 0.0;
};

/// Checks Im h > 0 and that weyl is set; raises InvalidArgument otherwise.
void validate(const SystemParams& p);

/// W(λ) = (μ - h)/(μ - h̄) · (m + h̄)/(m + h), m = m∞(λ). The first factor
/// is 1 when μ = ∞.
std::complex<double> transfer_W(std::complex<double> h, const ExtendedReal& mu, std::complex<double> m);
std::complex<double> transfer_W(const SystemParams& p, std::complex<double> lambda);

/// V(λ) = (m + μ) Im h / ((μ - Re h) m + μ Re h - |h|²); Im h/(m + Re h) when μ = ∞.
std::complex<double> impedance_V(std::complex<double> h, const ExtendedReal& mu, std::complex<double> m);
std::complex<double> impedance_V(const SystemParams& p, std::complex<double> lambda);

/// V = i (W - 1)/(W + 1) and its inverse W = (1 - iV)/(1 + iV).
std::complex<double> cayley_V_from_W(std::complex<double> w);
std::complex<double> cayley_W_from_V(std::complex<double> v);

struct VhReport {
  // Closed forms in terms of a = ∫dσ/(t+1), b = ∫dσ/t and γ.
  double vh_zero = 0.0;                  ///< (a - b)/(1 + ab)
  std::optional<double> vh_minus_inf;    ///< (a - γ)/(1 + aγ); empty at the pole 1 + aγ = 0
  std::optional<double> accretivity_value;  ///< 1 + V_h(0) V_h(-∞)
  double cot_alpha = 0.0;                ///< (1 + bγ)/(b - γ)
  double accretivity_quadratic = 0.0;    ///< γ² + γb + 1, usable at the pole

  // Present when a Weyl function and h were supplied.
  std::optional<std::complex<double>> numeric_vh_zero;       ///< V_h(-ε)
  std::optional<std::complex<double>> numeric_vh_minus_inf;  ///< V_h(-R)
};

struct VhNumeric {
  std::complex<double> h;
  WeylFunction weyl;
  double epsilon = 1e-6;
  double far = 1e8;
};

/// V_h(z) = -i (1 - ρ)/(1 + ρ), ρ = [(m(z) + h̄)/(m(z) + h)]·[(m(-1) + h)/(m(-1) + h̄)].
std::complex<double> vh_value(std::complex<double> h, const WeylFunction& weyl, std::complex<double> z);

/// Raises SideConditionViolated when b - γ <= 0.
VhReport vh_functional(double a, double b, double gamma,
                       const std::optional<VhNumeric>& numeric = std::nullopt);

struct VerificationSample {
  std::complex<double> z;
  std::complex<double> v_in;
  std::complex<double> v_model;
};

struct VerificationReport {
  double max_residual = 0.0;
  std::optional<double> eta_residual;
  std::vector<VerificationSample> samples;
  std::optional<ClassTag> class_tag;
  double tolerance = 1e-6;
  bool pass = false;
};

/// Default verification points: 5 radii × 4 arguments of log_polar_grid.
std::vector<std::complex<double>> default_verification_grid();

/// Compares V_Θ(z; h, μ) against the input V(z) on sample_z.
VerificationReport verify_realization(const StieltjesLikeFunction& f, const SystemParams& p,
                                      const std::vector<std::complex<double>>& sample_z,
                                      double tolerance = 1e-6, const quad::Options& opt = {});

}  // namespace slr
