#include "slr/weyl.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <type_traits>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "slr/error.hpp"
#include "slr/extended_real.hpp"
#include "slr/stieltjes.hpp"

namespace slr {

namespace {

constexpr const char* kModule = "weyl";
// Checkpoint spacing for renormalization and Wronskian checks.
constexpr double kChunk = 1.0;
// The stepper runs tighter than the caller's ode_tol so that the accumulated
// error over a whole integration stays within it.
constexpr double kStepperTolFactor = 1e-2;

namespace ode = boost::numeric::odeint;

template <std::size_t N>
using State = std::array<std::complex<double>, N>;

template <std::size_t N, class Rhs>
void advance(const Rhs& rhs, State<N>& state, double x0, double x1, double tol) {
  auto stepper = ode::make_controlled(tol, tol,
                                      ode::runge_kutta_dopri5<State<N>, double, State<N>, double>());
  const double dx0 = std::copysign(std::min(1e-3, std::abs(x1 - x0)), x1 - x0);
  try {
    ode::integrate_adaptive(stepper, rhs, state, x0, x1, dx0);
  } catch (const std::exception& e) {
    throw Error(ErrorKind::OdeStepFailure, kModule, std::string("integrator gave up: ") + e.what());
  }
  for (const auto& v : state) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorKind::OdeStepFailure, kModule, "non-finite solution value");
    }
  }
}

void require_resolvent_point(const HalfLinePotential& p, std::complex<double> lambda) {
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag())) {
    throw Error(ErrorKind::InvalidArgument, kModule, "λ must be finite");
  }
  if (lambda.imag() == 0.0 && lambda.real() >= p.q_inf()) {
    throw Error(ErrorKind::PoleOnSupport, kModule,
                "λ = " + format_double(lambda.real()) +
                    " lies on the continuous spectrum [q_inf, ∞); m∞ needs a decaying solution");
  }
}

}  // namespace

HalfLinePotential::HalfLinePotential(double a, Kind kind) : a_(a), kind_(std::move(kind)) {
  if (!std::isfinite(a_)) throw Error(ErrorKind::InvalidArgument, kModule, "endpoint a must be finite");
  if (const auto* c = std::get_if<ConstantPotential>(&kind_)) {
    if (!std::isfinite(c->value)) {
      throw Error(ErrorKind::InvalidArgument, kModule, "constant potential must be finite");
    }
  }
  if (const auto* t = std::get_if<TablePotential>(&kind_)) {
    if (t->grid.empty() || t->grid.size() != t->values.size()) {
      throw Error(ErrorKind::InvalidArgument, kModule, "table potential needs one value per grid point");
    }
    if (t->grid.front() != a_) {
      throw Error(ErrorKind::InvalidArgument, kModule, "table grid must start at a");
    }
    for (std::size_t i = 1; i < t->grid.size(); ++i) {
      if (!(t->grid[i] > t->grid[i - 1])) {
        throw Error(ErrorKind::InvalidArgument, kModule, "table grid must be strictly increasing");
      }
    }
    for (double v : t->values) {
      if (!std::isfinite(v)) throw Error(ErrorKind::InvalidArgument, kModule, "q must be real and finite");
    }
    if (!std::isfinite(t->cutoff) || t->cutoff < t->grid.back() || !std::isfinite(t->q_inf)) {
      throw Error(ErrorKind::InvalidArgument, kModule, "table cutoff must be >= last grid point");
    }
  }
}

double HalfLinePotential::operator()(double x) const {
  return std::visit(
      [x](const auto& k) -> double {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, ZeroPotential>) {
          return 0.0;
        } else if constexpr (std::is_same_v<K, ConstantPotential>) {
          return k.value;
        } else {
          if (x >= k.cutoff) return k.q_inf;
          if (x >= k.grid.back()) return k.values.back();
          if (x <= k.grid.front()) return k.values.front();
          const auto it = std::upper_bound(k.grid.begin(), k.grid.end(), x);
          const auto i = static_cast<std::size_t>(it - k.grid.begin()) - 1;
          const double w = (x - k.grid[i]) / (k.grid[i + 1] - k.grid[i]);
          return k.values[i] + w * (k.values[i + 1] - k.values[i]);
        }
      },
      kind_);
}

double HalfLinePotential::q_inf() const {
  if (const auto* c = std::get_if<ConstantPotential>(&kind_)) return c->value;
  if (const auto* t = std::get_if<TablePotential>(&kind_)) return t->q_inf;
  return 0.0;
}

double HalfLinePotential::cutoff() const {
  if (const auto* t = std::get_if<TablePotential>(&kind_)) return t->cutoff;
  return a_;
}

CauchySolution solve_cauchy(const HalfLinePotential& p, std::complex<double> lambda, double x_end,
                            double ode_tol) {
  if (!(x_end > p.a())) throw Error(ErrorKind::InvalidArgument, kModule, "x_end must exceed a");
  if (!(ode_tol > 0.0)) throw Error(ErrorKind::InvalidArgument, kModule, "ode_tol must be > 0");

  auto rhs = [&](const State<4>& y, State<4>& dy, double x) {
    const std::complex<double> k = p(x) - lambda;
    dy[0] = y[1];
    dy[1] = k * y[0];
    dy[2] = y[3];
    dy[3] = k * y[2];
  };

  State<4> y{0.0, 1.0, -1.0, 0.0};
  CauchySolution out;
  double x = p.a();
  while (x < x_end) {
    const double next = std::min(x + kChunk, x_end);
    advance<4>(rhs, y, x, next, ode_tol * kStepperTolFactor);
    x = next;
    const auto w = y[0] * y[3] - y[1] * y[2];
    const double scale = std::abs(y[0]) * std::abs(y[3]) + std::abs(y[1]) * std::abs(y[2]);
    out.wronskian_defect = std::max(out.wronskian_defect, std::abs(w - 1.0) / std::max(scale, 1.0));
  }
  if (out.wronskian_defect > 10.0 * ode_tol) {
    throw Error(ErrorKind::OdeStepFailure, kModule,
                "Wronskian drifted by " + format_double(out.wronskian_defect) + " > 10·ode_tol");
  }
  out.phi1 = y[0];
  out.dphi1 = y[1];
  out.phi2 = y[2];
  out.dphi2 = y[3];
  return out;
}

WeylEvaluator::WeylEvaluator(HalfLinePotential potential, std::optional<double> length,
                             double ode_tol)
    : potential_(std::move(potential)), ode_tol_(ode_tol) {
  const double minimum = std::max(potential_.cutoff() - potential_.a(), 10.0);
  length_ = length.value_or(minimum);
  if (!(length_ >= minimum)) {
    throw Error(ErrorKind::InvalidArgument, kModule,
                "truncation length L must be >= max(cutoff - a, 10)");
  }
  if (!(ode_tol_ > 0.0)) throw Error(ErrorKind::InvalidArgument, kModule, "ode_tol must be > 0");
}

std::complex<double> WeylEvaluator::integrate_back(std::complex<double> lambda,
                                                   double x_right) const {
  const auto& p = potential_;
  auto rhs = [&](const State<2>& y, State<2>& dy, double x) {
    dy[0] = y[1];
    dy[1] = (p(x) - lambda) * y[0];
  };
  // Beyond x_right the potential is q_inf, so exp(i sqrt(λ - q_inf) x) is
  // the exact decaying solution there.
  const std::complex<double> i(0.0, 1.0);
  State<2> y{1.0, i * sqrt_upper(lambda - p.q_inf())};
  double x = x_right;
  while (x > p.a()) {
    const double next = std::max(x - kChunk, p.a());
    advance<2>(rhs, y, x, next, ode_tol_ * kStepperTolFactor);
    x = next;
    const double norm = std::max(std::abs(y[0]), std::abs(y[1]));
    y[0] /= norm;
    y[1] /= norm;
  }
  if (std::abs(y[0]) < ode_tol_) {
    throw Error(ErrorKind::NodeAtEndpoint, kModule,
                "decaying solution vanishes at a (|y(a)| < ode_tol); λ is near a Dirichlet eigenvalue");
  }
  return -y[1] / y[0];
}

WeylValue WeylEvaluator::weyl_m(std::complex<double> lambda) const {
  require_resolvent_point(potential_, lambda);
  const double x_right = potential_.a() + length_;
  const auto m_short = integrate_back(lambda, x_right);
  const auto m_long = integrate_back(lambda, potential_.a() + 2.0 * length_);
  const double scale = std::max(1.0, std::abs(m_short));
  const double diff = std::abs(m_short - m_long);
  if (diff > 10.0 * ode_tol_ * scale) {
    throw Error(ErrorKind::TruncationDominates, kModule,
                "|m(L) - m(2L)| = " + format_double(diff) + " exceeds 10·ode_tol");
  }
  return {m_short, diff + ode_tol_ * scale};
}

double WeylEvaluator::weyl_m_at_minus_zero() const {
  constexpr int kLevels = 16;
  std::vector<double> m(kLevels + 1);
  for (int k = 0; k <= kLevels; ++k) {
    m[k] = weyl_m(std::complex<double>(-std::ldexp(1.0, -k), 0.0)).m.real();
  }
  // m(-s) ≈ m0 + c1 sqrt(s) + c2 s + ...; successive sqrt(s) shrink by √2.
  const double r = std::numbers::sqrt2;
  std::vector<double> level1(kLevels);
  for (int k = 0; k < kLevels; ++k) level1[k] = (r * m[k + 1] - m[k]) / (r - 1.0);
  std::vector<double> level2(kLevels - 1);
  for (int k = 0; k + 1 < kLevels; ++k) level2[k] = 2.0 * level1[k + 1] - level1[k];

  const double last = level2.back();
  const double prev = level2[level2.size() - 2];
  if (std::abs(last - prev) > 1e-5 * std::max(1.0, std::abs(last))) {
    throw Error(ErrorKind::NonConvergent, kModule,
                "Richardson extrapolants of m∞(-2^-k) disagree by " +
                    format_double(std::abs(last - prev)));
  }
  return last;
}

double boundary_trace_constant(const HalfLinePotential& p) {
  if (!p.is_zero()) {
    throw Error(ErrorKind::Unsupported, kModule,
                "boundary-trace constant c is only known for q ≡ 0; supply c explicitly");
  }
  return 1.0 / std::numbers::sqrt2;
}

std::complex<double> weyl_m_constant(double v, std::complex<double> lambda) {
  return std::complex<double>(0.0, -1.0) * sqrt_upper(lambda - v);
}

}  // namespace slr
