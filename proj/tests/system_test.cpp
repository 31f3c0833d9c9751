#include "slr/system.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fixtures.hpp"
#include "slr/error.hpp"
#include "slr/restore.hpp"

namespace slr {
namespace {

const std::complex<double> kI(0.0, 1.0);
const ExtendedReal kInfMu = ExtendedReal::infinity();

SystemParams gamma_family_params(double gamma) {
  const auto h = restore_h(ExtendedReal::infinity(), gamma, 0.0, 0.0, 1.0);
  return {h, restore_mu(h, gamma), weyl_function_constant(0.0), 0.0};
}

std::complex<double> random_off_axis(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = std::pow(10.0, 4.0 * u(rng) - 2.0);
  const double arg = (2.0 * u(rng) - 1.0) * std::numbers::pi * 0.98;
  return std::polar(r, arg + (arg >= 0 ? 0.01 : -0.01) * std::numbers::pi);
}

TEST(TransferW, FreeExampleAtMinusOne) {
  const SystemParams p{kI, kInfMu, weyl_function_constant(0.0), 0.0};
  EXPECT_NEAR(std::abs(transfer_W(p, {-1.0, 0.0}) - (-kI)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(cayley_W_from_V(1.0) - (-kI)), 0.0, 1e-15);
}

TEST(TransferW, RealHRejected) {
  const SystemParams p{{1.0, 0.0}, kInfMu, weyl_function_constant(0.0), 0.0};
  EXPECT_THROW(transfer_W(p, {-1.0, 0.0}), Error);
  EXPECT_THROW(impedance_V(p, {-1.0, 0.0}), Error);
}

TEST(TransferW, UnitModulusForRealMAndMu) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 50; ++i) {
    const std::complex<double> h(u(rng), std::abs(u(rng)) + 0.1);
    EXPECT_NEAR(std::abs(transfer_W(h, u(rng), u(rng))), 1.0, 1e-14);
  }
}

TEST(TransferW, PoleDetected) {
  EXPECT_THROW(transfer_W(kI, kInfMu, -kI), Error);
}

TEST(ImpedanceV, InverseSqrtIsReciprocalWeyl) {
  const SystemParams p{kI, kInfMu, weyl_function_constant(0.0), 0.0};
  for (std::complex<double> z : {std::complex<double>(-1.0, 0.0), {2.0, 1.0}, {-0.1, 5.0}}) {
    EXPECT_LT(std::abs(impedance_V(p, z) - kI / sqrt_upper(z)), 1e-14) << z;
  }
}

TEST(ImpedanceV, GammaFamilyAtMinusOne) {
  for (double g : {0.25, 0.5, 1.0, 2.0}) {
    const auto v = impedance_V(gamma_family_params(g), {-1.0, 0.0});
    EXPECT_NEAR(std::abs(v - (g + 1.0)), 0.0, 1e-13) << g;
    EXPECT_LT(std::abs(v - eval_V(fixtures::inverse_sqrt_function(g), {-1.0, 0.0})), 1e-8);
  }
}

TEST(ImpedanceV, HerglotzForAccretiveFixtures) {
  std::vector<SystemParams> cases = {{kI, kInfMu, weyl_function_constant(0.0), 0.0}};
  for (double g : {0.25, 1.0, 4.0}) cases.push_back(gamma_family_params(g));
  cases.push_back({restore_h(1.0, -0.5, 1.0, 0.5), restore_mu(restore_h(1.0, -0.5, 1.0, 0.5), -0.5),
                   weyl_function_constant(0.0), 1.0});
  for (const auto& p : cases) {
    double worst = 0.0;
    for (const auto& z : log_polar_grid()) worst = std::min(worst, impedance_V(p, z).imag());
    EXPECT_GE(worst, -1e-10);
  }
}

TEST(Cayley, Examples) {
  EXPECT_NEAR(std::abs(cayley_V_from_W(-kI) - 1.0), 0.0, 1e-15);
  EXPECT_EQ(cayley_W_from_V(0.0), std::complex<double>(1.0, 0.0));
  EXPECT_THROW(cayley_V_from_W(-1.0), Error);
  EXPECT_THROW(cayley_W_from_V(kI), Error);
}

TEST(Cayley, RoundTrip) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const std::complex<double> v(u(rng), u(rng));
    EXPECT_LT(std::abs(cayley_V_from_W(cayley_W_from_V(v)) - v), 1e-14) << v;
    const std::complex<double> w(u(rng), u(rng));
    EXPECT_LT(std::abs(cayley_W_from_V(cayley_V_from_W(w)) - w), 1e-14) << w;
  }
}

TEST(SystemProperties, ConsistencySquare) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const std::complex<double> h(4.0 * u(rng) - 2.0, 0.1 + 2.0 * u(rng));
    const ExtendedReal mu = u(rng) < 0.2 ? kInfMu : ExtendedReal(10.0 * u(rng) - 5.0);
    const SystemParams p{h, mu, weyl_function_constant(2.0 * u(rng)), 0.0};
    const auto lambda = random_off_axis(rng);
    const auto v = impedance_V(p, lambda);
    EXPECT_LT(std::abs(cayley_V_from_W(transfer_W(p, lambda)) - v), 1e-12 * std::max(1.0, std::abs(v))) << i;
  }
}

TEST(SystemProperties, InfiniteMuContinuity) {
  const std::complex<double> h(0.3, 0.8);
  const auto m = weyl_m_constant(0.0, {-2.0, 1.0});
  const auto limit = transfer_W(h, kInfMu, m);
  double previous = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= 8; ++k) {
    const double gap = std::abs(transfer_W(h, std::pow(10.0, k), m) - limit);
    EXPECT_LT(gap, previous) << k;
    previous = gap;
  }
  EXPECT_LT(previous, 1e-7);
}

TEST(VhFunctional, ExtremalExample) {
  const auto r = vh_functional(1.0, 2.0, -1.0);
  EXPECT_NEAR(r.vh_zero, -1.0 / 3.0, 1e-15);
  EXPECT_FALSE(r.vh_minus_inf);
  EXPECT_FALSE(r.accretivity_value);
  EXPECT_EQ(r.accretivity_quadratic, 0.0);
}

TEST(VhFunctional, SectorialExample) {
  const auto r = vh_functional(1.0, 2.0, 0.0);
  EXPECT_NEAR(r.vh_zero, -1.0 / 3.0, 1e-15);
  ASSERT_TRUE(r.vh_minus_inf);
  EXPECT_EQ(*r.vh_minus_inf, 1.0);
  ASSERT_TRUE(r.accretivity_value);
  EXPECT_NEAR(*r.accretivity_value, 2.0 / 3.0, 1e-15);
  EXPECT_EQ(r.cot_alpha, 0.5);
  EXPECT_NEAR(1.0 / r.cot_alpha, std::tan(sectoriality_angle(2.0, 0.0).alpha), 1e-15);
}

TEST(VhFunctional, SideCondition) {
  try {
    vh_functional(1.0, 2.0, 2.0);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SideConditionViolated);
  }
}

TEST(VhFunctional, AngleAgreesWithRestoreAtZeroGamma) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.05, 5.0);
  for (int i = 0; i < 10; ++i) {
    const double a = u(rng), b = u(rng);
    const auto r = vh_functional(a, b, 0.0);
    EXPECT_NEAR(std::atan(1.0 / r.cot_alpha), sectoriality_angle(b, 0.0).alpha, 1e-14) << b;
  }
}

TEST(VhFunctional, CotAlphaFormula) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 10; ++i) {
    const double b = 0.1 + 3.0 * u(rng);
    const double gamma = b - 0.1 - 4.0 * u(rng);
    const auto r = vh_functional(1.0, b, gamma);
    EXPECT_NEAR(r.cot_alpha, (1.0 + b * gamma) / (b - gamma), 1e-14);
    EXPECT_DOUBLE_EQ(r.accretivity_quadratic, gamma * gamma + gamma * b + 1.0);
  }
}

TEST(VhFunctional, NumericValueIsRelativeImpedance) {
  // V_h(z) = (V(z) - V(-1)) / (1 + V(z) V(-1)) for the realized impedance V
  for (const auto& p : {gamma_family_params(0.5), gamma_family_params(2.0),
                        SystemParams{kI, kInfMu, weyl_function_constant(0.0), 0.0}}) {
    const auto v_ref = impedance_V(p, {-1.0, 0.0});
    for (std::complex<double> z : {std::complex<double>(-3.0, 0.0), {-0.2, 0.0}, {1.0, 2.0}}) {
      const auto v = impedance_V(p, z);
      EXPECT_LT(std::abs(vh_value(p.h, p.weyl, z) - (v - v_ref) / (1.0 + v * v_ref)), 1e-12) << z;
    }
  }
  const auto r = vh_functional(1.0, 2.0, 0.0, VhNumeric{kI, weyl_function_constant(0.0)});
  ASSERT_TRUE(r.numeric_vh_zero && r.numeric_vh_minus_inf);
  // h = i, μ = ∞: V(0) = ∞ and V(-∞) = 0, V(-1) = 1
  EXPECT_NEAR(std::abs(*r.numeric_vh_zero - 1.0), 0.0, 1e-2);
  EXPECT_NEAR(std::abs(*r.numeric_vh_minus_inf + 1.0), 0.0, 1e-3);
}

TEST(VerifyRealization, InverseSqrtPipeline) {
  const auto f = fixtures::inverse_sqrt_function();
  const SystemParams p{kI, kInfMu, weyl_function(WeylEvaluator({0.0, ZeroPotential{}})), 0.0};
  const auto report = verify_realization(f, p, default_verification_grid());
  EXPECT_EQ(report.samples.size(), 20u);
  EXPECT_LT(report.max_residual, 1e-6);
  ASSERT_TRUE(report.eta_residual);
  EXPECT_LT(*report.eta_residual, 1e-12);
  ASSERT_TRUE(report.class_tag);
  EXPECT_EQ(report.class_tag->kind, ClassKind::SL0K);
  EXPECT_TRUE(report.pass);
}

TEST(VerifyRealization, GammaFamilyPipeline) {
  const auto report = verify_realization(fixtures::inverse_sqrt_function(0.5), gamma_family_params(0.5),
                                         default_verification_grid());
  EXPECT_LT(report.max_residual, 1e-6);
  EXPECT_TRUE(report.pass);
}

TEST(VerifyRealization, DetectsPerturbedH) {
  auto p = gamma_family_params(0.5);
  p.h += 0.1;
  const auto report = verify_realization(fixtures::inverse_sqrt_function(0.5), p, default_verification_grid());
  // direct evaluation of the perturbed model at one point
  const std::complex<double> z = default_verification_grid().front();
  EXPECT_GE(report.max_residual, std::abs(impedance_V(p, z) - eval_V(fixtures::inverse_sqrt_function(0.5), z)));
  EXPECT_GT(report.max_residual, 1e-2);
  EXPECT_FALSE(report.pass);
}

TEST(VerifyRealization, FiniteMassLeavesClassEmpty) {
  const StieltjesLikeFunction f{fixtures::b2_finite_mass_measure(), 0.0};
  const SystemParams p{kI, kInfMu, weyl_function_constant(0.0), 0.0};
  const auto report = verify_realization(f, p, {{-1.0, 1.0}});
  EXPECT_FALSE(report.class_tag);
  EXPECT_FALSE(report.pass);
}

}  // namespace
}  // namespace slr
