#pragma once

#include <complex>
#include <optional>
#include <variant>
#include <vector>

namespace slr {

struct ZeroPotential {};

struct ConstantPotential {
  double value = 0.0;
};

/// Linear interpolation on grid; the last value is held up to cutoff and
/// q ≡ q_inf beyond it.
struct TablePotential {
  std::vector<double> grid;
  std::vector<double> values;
  double cutoff = 0.0;
  double q_inf = 0.0;
};

/// Real potential q on [a, ∞) for l(y) = -y'' + q y, limit-point at ∞.
class HalfLinePotential {
 public:
  using Kind = std::variant<ZeroPotential, ConstantPotential, TablePotential>;

  HalfLinePotential() = default;
  HalfLinePotential(double a, Kind kind);

  double a() const { return a_; }
  const Kind& kind() const { return kind_; }
  bool is_zero() const { return std::holds_alternative<ZeroPotential>(kind_); }

  double operator()(double x) const;
  double q_inf() const;
  /// Point beyond which q ≡ q_inf (a for zero and constant potentials).
  double cutoff() const;

 private:
  double a_ = 0.0;
  Kind kind_ = ZeroPotential{};
};

/// Values at x_end of the Cauchy solutions φ₁ (φ₁(a)=0, φ₁'(a)=1) and
/// φ₂ (φ₂(a)=-1, φ₂'(a)=0) of l(y) = λ y.
struct CauchySolution {
  std::complex<double> phi1;
  std::complex<double> dphi1;
  std::complex<double> phi2;
  std::complex<double> dphi2;
  /// max over checkpoints of |W - 1| / (|φ₁||φ₂'| + |φ₁'||φ₂|), W the Wronskian
  double wronskian_defect = 0.0;

  std::complex<double> wronskian() const { return phi1 * dphi2 - dphi1 * phi2; }
};

CauchySolution solve_cauchy(const HalfLinePotential& p, std::complex<double> lambda, double x_end,
                            double ode_tol = 1e-9);

struct WeylValue {
  std::complex<double> m;
  double err_est = 0.0;  ///< |m(L) - m(2L)| plus the integrator tolerance
};

/// Computes m∞(λ) by integrating the solution that decays at +∞ backward
/// from a + L, so that φ₂ + m∞ φ₁ ∈ L²[a, ∞).
class WeylEvaluator {
 public:
  explicit WeylEvaluator(HalfLinePotential potential, std::optional<double> length = std::nullopt,
                         double ode_tol = 1e-9);

  const HalfLinePotential& potential() const { return potential_; }
  double length() const { return length_; }
  double ode_tol() const { return ode_tol_; }

  /// m∞(λ) for λ off the continuous spectrum [q_inf, ∞). Raises
  /// TruncationDominates when doubling L moves m by more than 10·ode_tol
  /// (relative), NodeAtEndpoint when the decaying solution vanishes at a.
  WeylValue weyl_m(std::complex<double> lambda) const;

  /// lim m∞(λ) as λ ↑ 0, from λ_k = -2^-k and two Richardson levels in
  /// sqrt(-λ). Raises NonConvergent when successive extrapolants disagree.
  double weyl_m_at_minus_zero() const;

 private:
  std::complex<double> integrate_back(std::complex<double> lambda, double x_right) const;

  HalfLinePotential potential_;
  double length_ = 10.0;
  double ode_tol_ = 1e-9;
};

/// c from the sup over D(A_K) of |y(a)|² / ∫(|y|² + |l(y)|²). Known in
/// closed form (1/√2) only for q ≡ 0; other potentials raise Unsupported.
double boundary_trace_constant(const HalfLinePotential& p);

/// Scalars describing the operator pair behind a spectral measure.
struct OperatorData {
  double theta = 0.0;          ///< quasi-kernel boundary parameter
  double m = 0.0;              ///< m∞(-0)
  std::optional<double> c;     ///< boundary-trace constant
  std::optional<double> xi;    ///< ∫dσ/(1+t²) / c
};

/// Closed-form m∞(λ) = -i sqrt(λ - v) for the constant potential v
/// (v = 0 is the free case), on the upper-sqrt branch.
std::complex<double> weyl_m_constant(double v, std::complex<double> lambda);

}  // namespace slr
