#include "slr/system.hpp"

#include <algorithm>
#include <cmath>

#include "slr/error.hpp"
#include "slr/restore.hpp"

namespace slr {

namespace {

constexpr const char* kModule = "system";
constexpr double kPoleTol = 1e-13;
const std::complex<double> kI(0.0, 1.0);

}  // namespace

WeylFunction weyl_function(const WeylEvaluator& evaluator) {
  return [evaluator](std::complex<double> lambda) { return evaluator.weyl_m(lambda).m; };
}

WeylFunction weyl_function_constant(double v) {
  return [v](std::complex<double> lambda) { return weyl_m_constant(v, lambda); };
}

void validate(const SystemParams& p) {
  if (!(p.h.imag() > 0.0)) throw Error(ErrorKind::InvalidArgument, kModule, "system needs Im h > 0");
  if (!p.weyl) throw Error(ErrorKind::InvalidArgument, kModule, "system needs a Weyl function");
}

std::complex<double> transfer_W(std::complex<double> h, const ExtendedReal& mu,
                                std::complex<double> m) {
  if (!(h.imag() > 0.0)) throw Error(ErrorKind::InvalidArgument, kModule, "transfer_W needs Im h > 0");
  const auto hbar = std::conj(h);
  if (std::abs(m + h) <= kPoleTol * std::max(1.0, std::abs(h))) {
    throw Error(ErrorKind::PoleOfW, kModule, "m∞(λ) + h = 0: λ is a pole of W");
  }
  const auto ratio = (m + hbar) / (m + h);
  if (mu.is_infinite()) return ratio;
  const double muv = mu.value();
  return (muv - h) / (muv - hbar) * ratio;
}

std::complex<double> transfer_W(const SystemParams& p, std::complex<double> lambda) {
  validate(p);
  return transfer_W(p.h, p.mu, p.weyl(lambda));
}

std::complex<double> impedance_V(std::complex<double> h, const ExtendedReal& mu,
                                 std::complex<double> m) {
  if (!(h.imag() > 0.0)) throw Error(ErrorKind::InvalidArgument, kModule, "impedance_V needs Im h > 0");
  const double x = h.real();
  const double y = h.imag();
  if (mu.is_infinite()) {
    const auto den = m + x;
    if (std::abs(den) <= kPoleTol * (1.0 + std::abs(m) + std::abs(x))) {
      throw Error(ErrorKind::PoleOfV, kModule, "m∞(λ) + Re h = 0");
    }
    return y / den;
  }
  const double muv = mu.value();
  const auto den = (muv - x) * m + muv * x - std::norm(h);
  const double scale = std::abs(muv - x) * std::abs(m) + std::abs(muv * x) + std::norm(h);
  if (std::abs(den) <= kPoleTol * std::max(scale, 1.0)) {
    throw Error(ErrorKind::PoleOfV, kModule, "(μ - Re h) m + μ Re h - |h|² = 0");
  }
  return (m + muv) * y / den;
}

std::complex<double> impedance_V(const SystemParams& p, std::complex<double> lambda) {
  validate(p);
  return impedance_V(p.h, p.mu, p.weyl(lambda));
}

std::complex<double> cayley_V_from_W(std::complex<double> w) {
  if (std::abs(w + 1.0) <= kPoleTol) throw Error(ErrorKind::CayleyPole, kModule, "W = -1");
  return kI * (w - 1.0) / (w + 1.0);
}

std::complex<double> cayley_W_from_V(std::complex<double> v) {
  const auto den = 1.0 + kI * v;
  if (std::abs(den) <= kPoleTol) throw Error(ErrorKind::CayleyPole, kModule, "1 + iV = 0");
  return (1.0 - kI * v) / den;
}

std::complex<double> vh_value(std::complex<double> h, const WeylFunction& weyl,
                              std::complex<double> z) {
  const auto hbar = std::conj(h);
  const auto m_z = weyl(z);
  const auto m_ref = weyl({-1.0, 0.0});
  const auto rho = ((m_z + hbar) / (m_z + h)) * ((m_ref + h) / (m_ref + hbar));
  if (std::abs(1.0 + rho) <= kPoleTol) throw Error(ErrorKind::CayleyPole, kModule, "V_h: ρ = -1");
  return -kI * (1.0 - rho) / (1.0 + rho);
}

VhReport vh_functional(double a, double b, double gamma, const std::optional<VhNumeric>& numeric) {
  if (!(b - gamma > 0.0)) {
    throw Error(ErrorKind::SideConditionViolated, kModule, "cot α formula needs b - γ > 0");
  }
  VhReport r;
  r.vh_zero = (a - b) / (1.0 + a * b);
  const double den_inf = 1.0 + a * gamma;
  if (std::abs(den_inf) > kPoleTol * (1.0 + std::abs(a * gamma))) {
    r.vh_minus_inf = (a - gamma) / den_inf;
    r.accretivity_value = 1.0 + r.vh_zero * *r.vh_minus_inf;
  }
  r.cot_alpha = (1.0 + b * gamma) / (b - gamma);
  r.accretivity_quadratic = gamma * gamma + gamma * b + 1.0;
  if (numeric) {
    r.numeric_vh_zero = vh_value(numeric->h, numeric->weyl, {-numeric->epsilon, 0.0});
    r.numeric_vh_minus_inf = vh_value(numeric->h, numeric->weyl, {-numeric->far, 0.0});
  }
  return r;
}

std::vector<std::complex<double>> default_verification_grid() { return log_polar_grid(5, 4); }

VerificationReport verify_realization(const StieltjesLikeFunction& f, const SystemParams& p,
                                      const std::vector<std::complex<double>>& sample_z,
                                      double tolerance, const quad::Options& opt) {
  validate(p);
  VerificationReport report;
  report.tolerance = tolerance;
  report.samples.reserve(sample_z.size());
  for (const auto& z : sample_z) {
    VerificationSample s{z, eval_V(f, z, opt), impedance_V(p, z)};
    report.max_residual = std::max(report.max_residual, std::abs(s.v_model - s.v_in));
    report.samples.push_back(s);
  }
  if (auto eta = quasi_kernel_eta(p.h, p.mu)) report.eta_residual = std::abs(*eta - p.theta_expected);
  try {
    report.class_tag = classify(f.sigma, f.gamma, opt);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotSL0) throw;
  }
  report.pass = report.max_residual < tolerance &&
                (!report.eta_residual || *report.eta_residual < tolerance);
  return report;
}

}  // namespace slr
