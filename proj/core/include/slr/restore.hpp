#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "slr/extended_real.hpp"
#include "slr/measure.hpp"
#include "slr/weyl.hpp"

namespace slr {

/// Relative threshold under which γ² + γb + 1 counts as zero (extremal).
inline constexpr double kExtremalTol = 1e-12;

struct Accretivity {
  bool accretive = false;
  bool strict = false;
};

/// b finite: accretive iff γ² + γb + 1 >= 0; b = ∞: accretive iff γ >= 0.
Accretivity accretivity(const ExtendedReal& b, double gamma);

struct GammaInterval {
  double lo;  ///< may be -inf
  double hi;  ///< may be +inf
};

/// Union of closed γ-intervals for which the restored operator is accretive.
struct GammaSet {
  std::vector<GammaInterval> intervals;
  std::vector<double> extremal_points;  ///< finite endpoints: γ² + γb + 1 = 0

  bool contains(double gamma) const;
  bool is_whole_line() const;
};

GammaSet gamma_admissible(const ExtendedReal& b);

enum class SectorKind { Sectorial, Extremal, NonAccretive };

struct Sectoriality {
  SectorKind kind = SectorKind::NonAccretive;
  double alpha = 0.0;  ///< in (0, π/2) when Sectorial
};

/// tan α = b / (γ² + γb + 1), or tan α = 1/γ when b = ∞.
Sectoriality sectoriality_angle(const ExtendedReal& b, double gamma);

struct MaxSectoriality {
  double gamma;
  double alpha;
};

/// γ* = -b/2 and α* = arctan(b / (1 - b²/4)); OutOfRange unless 0 < b < 2.
MaxSectoriality max_sectoriality(double b);

/// Boundary parameter h = x + iy of the restored operator.
///
/// Finite b: x = θ + γ(θ+m)b/(1+γ²), y = (θ+m)b/(1+γ²).
/// Infinite b: θ must equal -m, and x = -m + γξ/(1+γ²), y = ξ/(1+γ²).
std::complex<double> restore_h(const ExtendedReal& b, double gamma, double theta, double m,
                               std::optional<double> xi = std::nullopt,
                               double theta_tol = 1e-8);

/// μ = Re h + Im h / γ, or ∞ when γ = 0.
ExtendedReal restore_mu(std::complex<double> h, double gamma);

/// Quasi-kernel boundary parameter η = (μ Re h - |h|²)/(μ - Re h); Re h when
/// μ = ∞. Unavailable when |μ - Re h| < 1e-8 (1 + |μ|).
std::optional<double> quasi_kernel_eta(std::complex<double> h, const ExtendedReal& mu);

struct Circle {
  std::complex<double> center;
  double radius = 0.0;
  std::optional<std::complex<double>> excluded_point;  ///< the γ = ±∞ limit

  /// |(x - cx)² + (y - cy)² - r²| at h.
  double residual(std::complex<double> h) const;
};

Circle h_locus(const ExtendedReal& b, double theta, double m, std::optional<double> xi = std::nullopt);

/// μ(γ) = offset + numerator / γ.
struct Hyperbola {
  double offset = 0.0;
  double numerator = 0.0;
  std::optional<double> zero_crossing_gamma;  ///< γ with μ = 0, when it exists

  ExtendedReal at(double gamma) const;
};

Hyperbola mu_locus(const ExtendedReal& b, double theta, double m, std::optional<double> xi = std::nullopt);

struct RestoreFlags {
  bool accretive = false;
  bool sectorial = false;
  bool extremal = false;
};

struct RestoredSystem {
  std::complex<double> h;
  ExtendedReal mu;
  std::optional<double> alpha;
  RestoreFlags flags;
  ClassTag class_tag;
  double gamma = 0.0;
};

/// Full restoration for a given free term γ and operator data. For b = ∞,
/// op.xi must be set (or op.c, giving ξ = i2 / c).
RestoredSystem restore_system(const Moments& mom, double gamma, const OperatorData& op,
                              const ClassTag& tag);

struct SweepRow {
  double gamma = 0.0;
  std::complex<double> h;
  ExtendedReal mu;
  Sectoriality sector;
  bool accretive = false;
  double circle_residual = 0.0;
  std::optional<double> eta_residual;  ///< |η - θ|, unavailable near μ = Re h
};

/// n_samples rows, γ evenly spaced over [gamma_lo, gamma_hi], ordered by γ.
std::vector<SweepRow> sweep(const ExtendedReal& b, double theta, double m, std::optional<double> xi,
                            double gamma_lo, double gamma_hi, std::size_t n_samples);

}  // namespace slr
