#include "slr/restore.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "slr/error.hpp"

namespace slr {

namespace {

constexpr const char* kModule = "restore";
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive_b(const ExtendedReal& b) {
  if (b.is_finite() && !(b.value() > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, kModule, "∫dσ/t must be > 0");
  }
}

double quadratic(double b, double gamma) { return gamma * gamma + gamma * b + 1.0; }

bool is_extremal_value(double b, double gamma) {
  const double scale = 1.0 + gamma * gamma + std::abs(gamma * b);
  return std::abs(quadratic(b, gamma)) <= kExtremalTol * scale;
}

// Checks shared by restore_h, h_locus and mu_locus; returns ξ for b = ∞.
double check_case(const ExtendedReal& b, double theta, double m, std::optional<double> xi,
                  double theta_tol) {
  require_positive_b(b);
  if (b.is_finite()) {
    if (!(theta + m > 0.0)) {
      throw Error(ErrorKind::DegenerateImaginaryPart, kModule,
                  "θ + m∞(-0) must be > 0 for Im h > 0 (got " + format_double(theta + m) + ")");
    }
    return 0.0;
  }
  if (!xi) throw Error(ErrorKind::MissingXi, kModule, "b = ∞ requires ξ = ∫dσ/(1+t²) / c");
  if (!(*xi > 0.0)) {
    throw Error(ErrorKind::DegenerateImaginaryPart, kModule, "ξ must be > 0 for Im h > 0");
  }
  if (std::abs(theta + m) > theta_tol * std::max(1.0, std::abs(m))) {
    throw Error(ErrorKind::ThetaMismatch, kModule,
                "b = ∞ forces θ = -m∞(-0) (Krein–von Neumann quasi-kernel); |θ + m| = " +
                    format_double(std::abs(theta + m)));
  }
  return *xi;
}

}  // namespace

Accretivity accretivity(const ExtendedReal& b, double gamma) {
  require_positive_b(b);
  if (b.is_infinite()) return {gamma >= 0.0, gamma > 0.0};
  if (is_extremal_value(b.value(), gamma)) return {true, false};
  const double q = quadratic(b.value(), gamma);
  return {q > 0.0, q > 0.0};
}

bool GammaSet::contains(double gamma) const {
  for (const auto& iv : intervals) {
    if (gamma >= iv.lo && gamma <= iv.hi) return true;
  }
  return false;
}

bool GammaSet::is_whole_line() const {
  // intervals are sorted and closed; the union is ℝ when they chain
  if (intervals.empty() || intervals.front().lo != -kInf) return false;
  double reach = intervals.front().hi;
  for (std::size_t i = 1; i < intervals.size(); ++i) {
    if (intervals[i].lo > reach) return false;
    reach = std::max(reach, intervals[i].hi);
  }
  return reach == kInf;
}

GammaSet gamma_admissible(const ExtendedReal& b) {
  require_positive_b(b);
  GammaSet set;
  if (b.is_infinite()) {
    set.intervals = {{0.0, kInf}};
    set.extremal_points = {0.0};
    return set;
  }
  const double bv = b.value();
  if (bv < 2.0) {
    set.intervals = {{-kInf, kInf}};
    return set;
  }
  const double disc = std::sqrt(bv * bv - 4.0);
  const double g1 = (-bv - disc) / 2.0;
  const double g2 = (-bv + disc) / 2.0;
  set.intervals = {{-kInf, g1}, {g2, kInf}};
  set.extremal_points = g1 == g2 ? std::vector<double>{g1} : std::vector<double>{g1, g2};
  return set;
}

Sectoriality sectoriality_angle(const ExtendedReal& b, double gamma) {
  require_positive_b(b);
  if (b.is_infinite()) {
    if (gamma > 0.0) return {SectorKind::Sectorial, std::atan(1.0 / gamma)};
    if (gamma == 0.0) return {SectorKind::Extremal, 0.0};
    return {SectorKind::NonAccretive, 0.0};
  }
  const double bv = b.value();
  if (is_extremal_value(bv, gamma)) return {SectorKind::Extremal, 0.0};
  const double q = quadratic(bv, gamma);
  if (q < 0.0) return {SectorKind::NonAccretive, 0.0};
  return {SectorKind::Sectorial, std::atan(bv / q)};
}

MaxSectoriality max_sectoriality(double b) {
  if (!(b > 0.0 && b < 2.0)) {
    throw Error(ErrorKind::OutOfRange, kModule, "largest sectoriality angle needs 0 < b < 2");
  }
  return {-b / 2.0, std::atan(b / (1.0 - b * b / 4.0))};
}

std::complex<double> restore_h(const ExtendedReal& b, double gamma, double theta, double m,
                               std::optional<double> xi, double theta_tol) {
  const double xi_value = check_case(b, theta, m, xi, theta_tol);
  const double denom = 1.0 + gamma * gamma;
  if (b.is_finite()) {
    const double c = (theta + m) * b.value();
    return {theta + gamma * c / denom, c / denom};
  }
  return {-m + gamma * xi_value / denom, xi_value / denom};
}

ExtendedReal restore_mu(std::complex<double> h, double gamma) {
  if (!(h.imag() > 0.0)) throw Error(ErrorKind::InvalidArgument, kModule, "restore_mu needs Im h > 0");
  if (gamma == 0.0) return ExtendedReal::infinity();
  return h.real() + h.imag() / gamma;
}

std::optional<double> quasi_kernel_eta(std::complex<double> h, const ExtendedReal& mu) {
  if (mu.is_infinite()) return h.real();
  const double muv = mu.value();
  const double den = muv - h.real();
  if (std::abs(den) < 1e-8 * (1.0 + std::abs(muv))) return std::nullopt;
  return (muv * h.real() - std::norm(h)) / den;
}

double Circle::residual(std::complex<double> h) const {
  const double dx = h.real() - center.real();
  const double dy = h.imag() - center.imag();
  return std::abs(dx * dx + dy * dy - radius * radius);
}

Circle h_locus(const ExtendedReal& b, double theta, double m, std::optional<double> xi) {
  const double xi_value = check_case(b, theta, m, xi, 1e-8);
  if (b.is_finite()) {
    const double c = (theta + m) * b.value();
    return {{theta, c / 2.0}, c / 2.0, std::complex<double>(theta, 0.0)};
  }
  return {{-m, xi_value / 2.0}, xi_value / 2.0, std::complex<double>(-m, 0.0)};
}

ExtendedReal Hyperbola::at(double gamma) const {
  if (gamma == 0.0) return ExtendedReal::infinity();
  return offset + numerator / gamma;
}

Hyperbola mu_locus(const ExtendedReal& b, double theta, double m, std::optional<double> xi) {
  const double xi_value = check_case(b, theta, m, xi, 1e-8);
  Hyperbola hyp;
  if (b.is_finite()) {
    hyp.offset = theta;
    hyp.numerator = (theta + m) * b.value();
  } else {
    hyp.offset = -m;
    hyp.numerator = xi_value;
  }
  if (hyp.offset != 0.0) hyp.zero_crossing_gamma = -hyp.numerator / hyp.offset;
  return hyp;
}

RestoredSystem restore_system(const Moments& mom, double gamma, const OperatorData& op,
                              const ClassTag& tag) {
  std::optional<double> xi = op.xi;
  if (mom.b.is_infinite() && !xi && op.c) {
    if (!(*op.c > 0.0)) throw Error(ErrorKind::InvalidArgument, kModule, "c must be > 0");
    xi = mom.i2 / *op.c;
  }
  RestoredSystem out;
  out.gamma = gamma;
  out.class_tag = tag;
  out.h = restore_h(mom.b, gamma, op.theta, op.m, xi);
  out.mu = restore_mu(out.h, gamma);
  const auto sector = sectoriality_angle(mom.b, gamma);
  out.flags.accretive = sector.kind != SectorKind::NonAccretive;
  out.flags.sectorial = sector.kind == SectorKind::Sectorial;
  out.flags.extremal = sector.kind == SectorKind::Extremal;
  if (out.flags.sectorial) out.alpha = sector.alpha;
  return out;
}

std::vector<SweepRow> sweep(const ExtendedReal& b, double theta, double m, std::optional<double> xi,
                            double gamma_lo, double gamma_hi, std::size_t n_samples) {
  std::vector<SweepRow> rows;
  if (n_samples == 0) return rows;
  if (!(gamma_hi >= gamma_lo)) {
    throw Error(ErrorKind::InvalidArgument, kModule, "sweep needs gamma_lo <= gamma_hi");
  }
  const Circle circle = h_locus(b, theta, m, xi);
  const double theta_eff = b.is_finite() ? theta : -m;
  rows.reserve(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double frac = n_samples == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n_samples - 1);
    SweepRow row;
    row.gamma = gamma_lo + frac * (gamma_hi - gamma_lo);
    row.h = restore_h(b, row.gamma, theta, m, xi);
    row.mu = restore_mu(row.h, row.gamma);
    row.sector = sectoriality_angle(b, row.gamma);
    row.accretive = row.sector.kind != SectorKind::NonAccretive;
    row.circle_residual = circle.residual(row.h);
    if (auto eta = quasi_kernel_eta(row.h, row.mu)) row.eta_residual = std::abs(*eta - theta_eff);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace slr
