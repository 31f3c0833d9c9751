#pragma once

#include <complex>
#include <optional>
#include <variant>
#include <vector>

#include "slr/extended_real.hpp"
#include "slr/quadrature.hpp"

namespace slr {

struct Atom {
  double t = 0.0;  ///< location, t >= 0
  double w = 0.0;  ///< weight, w > 0
};

/// dσ/dt = coeff · t^exponent on the piece.
struct PowerLaw {
  double coeff = 0.0;
  double exponent = 0.0;
};

/// dσ/dt = coeff / sqrt(t); shorthand for PowerLaw{coeff, -1/2}.
struct InverseSqrt {
  double coeff = 0.0;
};

/// Piecewise-linear density through (knots[i], values[i]).
struct Table {
  std::vector<double> knots;
  std::vector<double> values;
};

struct DensityPiece {
  double lo = 0.0;
  double hi = 0.0;
  std::variant<PowerLaw, InverseSqrt, Table> kind;
};

/// dσ/dt = coeff · t^(-decay) for t >= threshold.
struct PowerTail {
  double threshold = 1.0;
  double coeff = 0.0;
  double decay = 0.5;
};

/// Nonnegative measure on [0, ∞): atoms, density pieces and an optional
/// power-law tail. Immutable once constructed; the constructor validates.
class SpectralMeasure {
 public:
  SpectralMeasure() = default;
  SpectralMeasure(std::vector<Atom> atoms, std::vector<DensityPiece> pieces,
                  std::optional<PowerTail> tail, bool declared_infinite_mass);

  /// Skips validation. Only for building deliberately invalid fixtures
  /// (e.g. negative densities) to exercise the analytic checks.
  static SpectralMeasure unchecked(std::vector<Atom> atoms, std::vector<DensityPiece> pieces,
                                   std::optional<PowerTail> tail, bool declared_infinite_mass);

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<DensityPiece>& pieces() const { return pieces_; }
  const std::optional<PowerTail>& tail() const { return tail_; }
  bool declared_infinite_mass() const { return declared_infinite_mass_; }
  bool empty() const { return atoms_.empty() && pieces_.empty() && !tail_; }

  /// Union of two measures (atoms and pieces concatenated, pieces re-sorted).
  /// At most one of the operands may carry a tail.
  SpectralMeasure merged(const SpectralMeasure& other) const;

 private:
  void validate() const;

  std::vector<Atom> atoms_;
  std::vector<DensityPiece> pieces_;
  std::optional<PowerTail> tail_;
  bool declared_infinite_mass_ = false;
};

enum class RealKernel {
  InvT,         ///< 1/t
  InvOnePlusT,  ///< 1/(1+t)
  InvOnePlusT2  ///< 1/(1+t^2)
};

/// 1/(t - z), z off [0, ∞).
struct Resolvent {
  std::complex<double> z;
};

struct RealIntegral {
  ExtendedReal value;
  double error = 0.0;
};

struct ComplexIntegral {
  std::complex<double> value;
  double error = 0.0;
};

/// ∫ k(t) dσ(t). InvT returns infinity when the integral diverges at the
/// origin (decided from the piece kinds, never numerically); an atom at
/// t = 0 raises DivergentAtOrigin.
RealIntegral integrate_weighted(const SpectralMeasure& sigma, RealKernel kernel,
                                const quad::Options& opt = {});

/// ∫ dσ(t)/(t - z). Raises PoleOnSupport for z on [0, ∞).
ComplexIntegral integrate_weighted(const SpectralMeasure& sigma, Resolvent kernel,
                                   const quad::Options& opt = {});

struct Moments {
  double a = 0.0;     ///< ∫ dσ/(t+1)
  ExtendedReal b;     ///< ∫ dσ/t
  double i2 = 0.0;    ///< ∫ dσ/(1+t^2)
  double err_a = 0.0;
  double err_b = 0.0;
  double err_i2 = 0.0;
};

Moments moments(const SpectralMeasure& sigma, const quad::Options& opt = {});

enum class ClassKind {
  SL0K,  ///< ∫dσ/t = ∞
  SL01K  ///< ∫dσ/t < ∞
};

struct ClassTag {
  ClassKind kind = ClassKind::SL0K;
  bool stieltjes = false;  ///< γ >= 0
};

const char* to_string(ClassKind kind);

/// Raises NotSL0 unless the measure declares infinite total mass.
ClassTag classify(const SpectralMeasure& sigma, double gamma, const quad::Options& opt = {});

}  // namespace slr
