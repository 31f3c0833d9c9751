#include "slr/weyl.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "slr/error.hpp"
#include "slr/stieltjes.hpp"

namespace slr {
namespace {

using std::numbers::pi;
const std::complex<double> kI(0.0, 1.0);

HalfLinePotential free_potential(double a = 0.0) { return {a, ZeroPotential{}}; }
HalfLinePotential constant_potential(double v) { return {0.0, ConstantPotential{v}}; }

std::vector<std::complex<double>> upper_grid() {
  std::vector<std::complex<double>> grid;
  for (double re : {-5.0, -1.0, 0.5, 3.0, 8.0}) {
    for (double im : {0.1, 0.7, 3.0, 10.0}) grid.emplace_back(re, im);
  }
  return grid;
}

TEST(SolveCauchy, FreeAtZeroSpectralParameter) {
  const auto s = solve_cauchy(free_potential(), 0.0, 1.0);
  EXPECT_NEAR(std::abs(s.phi1 - 1.0), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(s.dphi1 - 1.0), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(s.phi2 + 1.0), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(s.dphi2), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(s.wronskian() - 1.0), 0.0, 1e-10);
}

TEST(SolveCauchy, FreeAtUnitSpectralParameterMatchesSinCos) {
  const auto s = solve_cauchy(free_potential(), 1.0, pi);
  // φ₁ = sin x, φ₂ = -cos x
  EXPECT_NEAR(std::abs(s.phi1 - std::sin(pi)), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(s.dphi1 - std::cos(pi)), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(s.phi2 + std::cos(pi)), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(s.dphi2 - std::sin(pi)), 0.0, 1e-9);
}

TEST(SolveCauchy, ConstantShiftCancels) {
  const auto shifted = solve_cauchy(constant_potential(2.0), 2.0, 1.0);
  const auto free = solve_cauchy(free_potential(), 0.0, 1.0);
  EXPECT_NEAR(std::abs(shifted.phi1 - free.phi1), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(shifted.phi2 - free.phi2), 0.0, 1e-10);
}

TEST(SolveCauchy, WronskianConservation) {
  const double tol = 1e-9;
  for (const auto& p : {free_potential(), constant_potential(1.0), constant_potential(4.0)}) {
    for (std::complex<double> lambda : {std::complex<double>(-4.0, 0.0), {1.0, 0.0}, {2.0, 0.5}, {-1.0, 3.0}}) {
      const auto s = solve_cauchy(p, lambda, 6.0, tol);
      EXPECT_LE(s.wronskian_defect, 10.0 * tol) << lambda;
    }
  }
}

TEST(WeylM, FreeClosedFormAtMinusFour) {
  const WeylEvaluator ev(free_potential());
  const auto r = ev.weyl_m({-4.0, 0.0});
  EXPECT_NEAR(std::abs(r.m - 2.0), 0.0, 1e-6);
  EXPECT_GE(r.err_est, 0.0);
}

TEST(WeylM, FreeClosedFormAtI) {
  const WeylEvaluator ev(free_potential());
  const auto m = ev.weyl_m(kI).m;
  EXPECT_NEAR(std::abs(m - std::polar(1.0, -pi / 4)), 0.0, 1e-6);
}

TEST(WeylM, ReciprocalReproducesInverseSqrtFunction) {
  // h = i, μ = ∞ gives V = Im h / (m + Re h) = 1/m, which must equal i/sqrt(z).
  const WeylEvaluator ev(free_potential());
  for (std::complex<double> z : {std::complex<double>(-1.0, 0.0), {0.3, 2.0}, {-7.0, 0.5}}) {
    EXPECT_LT(std::abs(1.0 / ev.weyl_m(z).m - kI / sqrt_upper(z)), 1e-7) << z;
  }
}

TEST(WeylM, AgreesWithClosedFormOnGrid) {
  for (double v : {0.0, 1.0, 4.0}) {
    const WeylEvaluator ev(v == 0.0 ? free_potential() : constant_potential(v));
    for (const auto& lambda : upper_grid()) {
      const auto exact = weyl_m_constant(v, lambda);
      EXPECT_LT(std::abs(ev.weyl_m(lambda).m - exact) / std::abs(exact), 1e-6) << v << " " << lambda;
    }
  }
}

TEST(WeylM, SignOfImaginaryPartAndConjugateSymmetry) {
  // with m = -i sqrt(λ), -m and 1/m are Herglotz: Im m < 0 on the upper half-plane
  for (const auto& p : {free_potential(), constant_potential(1.0)}) {
    const WeylEvaluator ev(p);
    for (const auto& lambda : upper_grid()) {
      const auto up = ev.weyl_m(lambda).m;
      EXPECT_LT(up.imag(), 0.0) << lambda;
      EXPECT_GT((1.0 / up).imag(), 0.0) << lambda;
      EXPECT_LT(std::abs(ev.weyl_m(std::conj(lambda)).m - std::conj(up)), 1e-8) << lambda;
    }
  }
}

TEST(WeylM, TruncationStability) {
  const WeylEvaluator short_ev(free_potential(), 10.0);
  const WeylEvaluator long_ev(free_potential(), 20.0);
  for (const auto& lambda : upper_grid()) {
    if (lambda.imag() < 0.5) continue;
    EXPECT_LT(std::abs(short_ev.weyl_m(lambda).m - long_ev.weyl_m(lambda).m), 1e-7) << lambda;
  }
}

TEST(WeylM, TablePotentialMatchesEquivalentConstant) {
  // a table that is constant 1 everywhere behaves like the constant potential
  const HalfLinePotential table(0.0, TablePotential{{0.0, 2.0, 5.0}, {1.0, 1.0, 1.0}, 5.0, 1.0});
  const WeylEvaluator ev(table);
  const auto lambda = std::complex<double>(0.5, 1.0);
  EXPECT_LT(std::abs(ev.weyl_m(lambda).m - weyl_m_constant(1.0, lambda)), 1e-7);
}

TEST(WeylM, RejectsContinuousSpectrum) {
  const WeylEvaluator ev(constant_potential(1.0));
  EXPECT_THROW(ev.weyl_m({2.0, 0.0}), Error);
  EXPECT_NO_THROW(ev.weyl_m({0.5, 0.0}));
}

TEST(WeylM, NodeAtEndpointNearDirichletEigenvalue) {
  // A square well q = -25 on [0, 1), 0 beyond, has a Dirichlet bound state;
  // locate it by bisection on the sign of y(a) and then evaluate there.
  const HalfLinePotential well(0.0, TablePotential{{0.0, 1.0}, {-25.0, -25.0}, 1.0, 0.0});
  const WeylEvaluator ev(well);
  // k cot k = -κ with k² = 25 + λ, κ² = -λ; one root has k in (2.5, 3).
  auto f = [](double lambda) {
    const double k = std::sqrt(25.0 + lambda);
    return k / std::tan(k) + std::sqrt(-lambda);
  };
  double lo = 2.5 * 2.5 - 25.0, hi = 9.0 - 25.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    ((f(lo) < 0) == (f(mid) < 0) ? lo : hi) = mid;
  }
  try {
    ev.weyl_m({0.5 * (lo + hi), 0.0});
    ADD_FAILURE() << "expected NodeAtEndpoint";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NodeAtEndpoint);
  }
}

TEST(WeylMinusZero, FreeIsZero) {
  EXPECT_NEAR(WeylEvaluator(free_potential()).weyl_m_at_minus_zero(), 0.0, 1e-4);
}

TEST(WeylMinusZero, ConstantIsSqrtV) {
  for (double v : {1.0, 4.0, 0.25}) {
    EXPECT_NEAR(WeylEvaluator(constant_potential(v)).weyl_m_at_minus_zero(), std::sqrt(v), 1e-4) << v;
  }
}

TEST(WeylMinusZero, FreeMonotoneInS) {
  // m∞(-s) = sqrt(s) shrinks as s ↓ 0
  const WeylEvaluator ev(free_potential());
  double previous = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 12; ++k) {
    const double m = ev.weyl_m({-std::ldexp(1.0, -k), 0.0}).m.real();
    EXPECT_LT(m, previous);
    previous = m;
  }
}

TEST(BoundaryTraceConstant, FreeIsInverseSqrtTwo) {
  EXPECT_DOUBLE_EQ(boundary_trace_constant(free_potential()), 1.0 / std::numbers::sqrt2);
  EXPECT_DOUBLE_EQ(boundary_trace_constant(free_potential(5.0)), 1.0 / std::numbers::sqrt2);
}

TEST(BoundaryTraceConstant, TableUnsupported) {
  const HalfLinePotential table(0.0, TablePotential{{0.0, 1.0}, {1.0, 0.0}, 1.0, 0.0});
  try {
    boundary_trace_constant(table);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Unsupported);
  }
}

TEST(HalfLinePotential, Validation) {
  EXPECT_THROW(HalfLinePotential(0.0, TablePotential{{1.0, 2.0}, {0.0, 0.0}, 2.0, 0.0}), Error);
  EXPECT_THROW(HalfLinePotential(0.0, TablePotential{{0.0, 2.0}, {0.0, 0.0}, 1.0, 0.0}), Error);
  EXPECT_THROW(WeylEvaluator(free_potential(), 5.0), Error);
  EXPECT_THROW(WeylEvaluator(free_potential(), 10.0, 0.0), Error);
}

}  // namespace
}  // namespace slr
