#include "slr/measure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "slr/error.hpp"

namespace slr {

namespace {

constexpr const char* kModule = "measure";

[[noreturn]] void fail(ErrorKind kind, const std::string& detail) {
  throw Error(kind, kModule, detail);
}

PowerLaw as_power_law(const DensityPiece& piece) {
  if (const auto* p = std::get_if<PowerLaw>(&piece.kind)) return *p;
  return PowerLaw{std::get<InverseSqrt>(piece.kind).coeff, -0.5};
}

bool is_table(const DensityPiece& piece) { return std::holds_alternative<Table>(piece.kind); }

double real_kernel(RealKernel k, double t) {
  switch (k) {
    case RealKernel::InvT: return 1.0 / t;
    case RealKernel::InvOnePlusT: return 1.0 / (1.0 + t);
    case RealKernel::InvOnePlusT2: return 1.0 / (1.0 + t * t);
  }
  return 0.0;
}

// 1/(t - z) written out so that z -> conj(z) conjugates the result exactly.
std::complex<double> resolvent_kernel(std::complex<double> z, double t) {
  const double dx = t - z.real();
  const double y = z.imag();
  const double den = dx * dx + y * y;
  return {dx / den, y / den};
}

// t·k(t) as a function of w = 1/t; bounded as w -> 0.
double real_tail_factor(RealKernel k, double w) {
  switch (k) {
    case RealKernel::InvT: return 1.0;
    case RealKernel::InvOnePlusT: return 1.0 / (1.0 + w);
    case RealKernel::InvOnePlusT2: return w / (1.0 + w * w);
  }
  return 0.0;
}

std::complex<double> resolvent_tail_factor(std::complex<double> z, double w) {
  // 1/(1 - z w)
  const double re = 1.0 - z.real() * w;
  const double im = z.imag() * w;
  const double den = re * re + im * im;
  return {re / den, im / den};
}

double table_density(const Table& table, std::size_t segment, double t) {
  const double t0 = table.knots[segment];
  const double t1 = table.knots[segment + 1];
  const double v0 = table.values[segment];
  const double v1 = table.values[segment + 1];
  return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
}

// ∫_lo^hi coeff·t^e·g(t) dt for integrable e. Substituting u = t^(1+e)
// turns the measure coeff·t^e dt into the flat measure coeff/(1+e) du and
// removes any algebraic endpoint singularity at the origin.
template <class T, class G>
quad::Result<T> power_integral(double lo, double hi, double coeff, double e, const G& g,
                               const quad::Options& opt) {
  const double p = 1.0 + e;
  if (std::abs(p) < 1e-12) {
    auto r = quad::integrate<T>([&](double u) { return g(std::exp(u)); }, std::log(lo),
                                std::log(hi), opt);
    r.value *= coeff;
    r.error *= coeff;
    return r;
  }
  const double ua = std::pow(lo, p);
  const double ub = std::pow(hi, p);
  const double inv_p = 1.0 / p;
  auto r = quad::integrate<T>([&](double u) { return g(std::pow(u, inv_p)); }, std::min(ua, ub),
                              std::max(ua, ub), opt);
  const double factor = coeff / std::abs(p);
  r.value *= factor;
  r.error *= factor;
  return r;
}

// Tail ∫_T^∞ c t^(-s) k(t) dt with k(t) = O(1/t). The map t = T v^(-1/s)
// sends [T, ∞) to (0, 1] and turns the integrand into c T^(-s)/s · t k(t),
// which is bounded on (0, 1].
template <class T, class F>
quad::Result<T> tail_integral(const PowerTail& tail, const F& tail_factor,
                              const quad::Options& opt) {
  const double s = tail.decay;
  const double inv_s = 1.0 / s;
  const double scale = tail.coeff * std::pow(tail.threshold, -s) / s;
  auto r = quad::integrate<T>(
      [&](double v) { return tail_factor(std::pow(v, inv_s) / tail.threshold); }, 0.0, 1.0, opt);
  r.value *= scale;
  r.error *= scale;
  return r;
}

std::size_t component_count(const SpectralMeasure& sigma) {
  std::size_t n = sigma.tail() ? 1 : 0;
  for (const auto& piece : sigma.pieces()) {
    n += is_table(piece) ? std::get<Table>(piece.kind).knots.size() - 1 : 1;
  }
  return std::max<std::size_t>(n, 1);
}

}  // namespace

const char* to_string(ClassKind kind) { return kind == ClassKind::SL0K ? "SL0K" : "SL01K"; }

SpectralMeasure::SpectralMeasure(std::vector<Atom> atoms, std::vector<DensityPiece> pieces,
                                 std::optional<PowerTail> tail, bool declared_infinite_mass)
    : atoms_(std::move(atoms)),
      pieces_(std::move(pieces)),
      tail_(tail),
      declared_infinite_mass_(declared_infinite_mass) {
  validate();
}

SpectralMeasure SpectralMeasure::unchecked(std::vector<Atom> atoms,
                                           std::vector<DensityPiece> pieces,
                                           std::optional<PowerTail> tail,
                                           bool declared_infinite_mass) {
  SpectralMeasure m;
  m.atoms_ = std::move(atoms);
  m.pieces_ = std::move(pieces);
  m.tail_ = tail;
  m.declared_infinite_mass_ = declared_infinite_mass;
  return m;
}

SpectralMeasure SpectralMeasure::merged(const SpectralMeasure& other) const {
  if (tail_ && other.tail_) {
    throw Error(ErrorKind::InvalidArgument, kModule, "merged: both operands carry a tail");
  }
  auto atoms = atoms_;
  atoms.insert(atoms.end(), other.atoms_.begin(), other.atoms_.end());
  auto pieces = pieces_;
  pieces.insert(pieces.end(), other.pieces_.begin(), other.pieces_.end());
  std::sort(pieces.begin(), pieces.end(),
            [](const DensityPiece& x, const DensityPiece& y) { return x.lo < y.lo; });
  return SpectralMeasure(std::move(atoms), std::move(pieces), tail_ ? tail_ : other.tail_,
                         declared_infinite_mass_ || other.declared_infinite_mass_);
}

void SpectralMeasure::validate() const {
  for (const auto& atom : atoms_) {
    if (!std::isfinite(atom.t) || atom.t < 0.0) {
      fail(ErrorKind::InvalidMeasure, "atom location must be finite and >= 0");
    }
    if (!std::isfinite(atom.w) || atom.w <= 0.0) {
      fail(ErrorKind::InvalidMeasure, "atom weight must be finite and > 0");
    }
  }

  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const auto& piece = pieces_[i];
    if (!std::isfinite(piece.lo) || !std::isfinite(piece.hi) || piece.lo < 0.0 ||
        !(piece.hi > piece.lo)) {
      fail(ErrorKind::InvalidMeasure, "density piece needs finite 0 <= lo < hi");
    }
    if (i > 0 && pieces_[i - 1].hi > piece.lo) {
      fail(ErrorKind::InvalidMeasure, "density pieces must be sorted and non-overlapping");
    }
    if (tail_ && piece.hi > tail_->threshold) {
      fail(ErrorKind::InvalidMeasure, "density pieces must end before the tail threshold");
    }
    if (is_table(piece)) {
      const auto& table = std::get<Table>(piece.kind);
      if (table.knots.size() < 2 || table.knots.size() != table.values.size()) {
        fail(ErrorKind::InvalidMeasure, "table needs >= 2 knots and one value per knot");
      }
      for (std::size_t k = 1; k < table.knots.size(); ++k) {
        if (!(table.knots[k] > table.knots[k - 1])) {
          fail(ErrorKind::InvalidMeasure, "table knots must be strictly increasing");
        }
      }
      if (table.knots.front() != piece.lo || table.knots.back() != piece.hi) {
        fail(ErrorKind::InvalidMeasure, "table knots must span exactly [lo, hi]");
      }
      for (double v : table.values) {
        if (!std::isfinite(v) || v < 0.0) {
          fail(ErrorKind::InvalidMeasure, "table density values must be finite and >= 0");
        }
      }
    } else {
      const auto law = as_power_law(piece);
      if (!std::isfinite(law.coeff) || law.coeff < 0.0 || !std::isfinite(law.exponent)) {
        fail(ErrorKind::InvalidMeasure, "power-law coefficient must be finite and >= 0");
      }
      if (piece.lo == 0.0 && law.exponent <= -1.0 && law.coeff > 0.0) {
        fail(ErrorKind::NonIntegrable, "power law t^e with e <= -1 at the origin: ∫dσ/(1+t) = ∞");
      }
    }
  }

  if (tail_) {
    if (!std::isfinite(tail_->threshold) || tail_->threshold <= 0.0) {
      fail(ErrorKind::InvalidMeasure, "tail threshold must be finite and > 0");
    }
    if (!std::isfinite(tail_->coeff) || tail_->coeff <= 0.0) {
      fail(ErrorKind::InvalidMeasure, "tail coefficient must be finite and > 0");
    }
    if (!std::isfinite(tail_->decay) || tail_->decay <= 0.0) {
      fail(ErrorKind::NonIntegrable, "tail t^(-s) needs s > 0 for ∫dσ/(1+t) < ∞");
    }
  }

  if (declared_infinite_mass_ && (!tail_ || tail_->decay > 1.0)) {
    fail(ErrorKind::InvalidMeasure,
         "declared infinite mass requires a tail t^(-s) with s <= 1");
  }

  const auto a = integrate_weighted(*this, RealKernel::InvOnePlusT);
  if (!a.value.is_finite() || !std::isfinite(a.value.value())) {
    fail(ErrorKind::NonIntegrable, "∫dσ/(1+t) is not finite");
  }
}

RealIntegral integrate_weighted(const SpectralMeasure& sigma, RealKernel kernel,
                                const quad::Options& opt) {
  quad::Options part = opt;
  part.abs_tol = opt.abs_tol / static_cast<double>(component_count(sigma));

  double value = 0.0;
  double error = 0.0;
  bool infinite = false;

  for (const auto& atom : sigma.atoms()) {
    if (kernel == RealKernel::InvT && atom.t == 0.0) {
      fail(ErrorKind::DivergentAtOrigin, "atom at t = 0 makes ∫dσ/t undefined");
    }
    value += atom.w * real_kernel(kernel, atom.t);
  }

  for (const auto& piece : sigma.pieces()) {
    if (is_table(piece)) {
      const auto& table = std::get<Table>(piece.kind);
      for (std::size_t s = 0; s + 1 < table.knots.size(); ++s) {
        const double t0 = table.knots[s];
        const double t1 = table.knots[s + 1];
        if (kernel == RealKernel::InvT && t0 == 0.0) {
          if (table.values[s] > 0.0) {
            infinite = true;
          } else {
            // density vanishes linearly at the origin: d(t)/t is the slope
            value += table.values[s + 1];
          }
          continue;
        }
        auto r = quad::integrate<double>(
            [&](double t) { return table_density(table, s, t) * real_kernel(kernel, t); }, t0, t1,
            part);
        value += r.value;
        error += r.error;
      }
      continue;
    }

    const auto law = as_power_law(piece);
    if (law.coeff == 0.0) continue;
    if (kernel == RealKernel::InvT) {
      if (piece.lo == 0.0 && law.exponent <= 0.0) {
        infinite = true;
        continue;
      }
      auto r = power_integral<double>(piece.lo, piece.hi, law.coeff, law.exponent - 1.0,
                                      [](double) { return 1.0; }, part);
      value += r.value;
      error += r.error;
    } else {
      auto r = power_integral<double>(piece.lo, piece.hi, law.coeff, law.exponent,
                                      [&](double t) { return real_kernel(kernel, t); }, part);
      value += r.value;
      error += r.error;
    }
  }

  if (const auto& tail = sigma.tail()) {
    auto r = tail_integral<double>(*tail, [&](double w) { return real_tail_factor(kernel, w); },
                                   part);
    value += r.value;
    error += r.error;
  }

  if (infinite) return {ExtendedReal::infinity(), 0.0};
  return {ExtendedReal(value), error};
}

ComplexIntegral integrate_weighted(const SpectralMeasure& sigma, Resolvent kernel,
                                   const quad::Options& opt) {
  const auto z = kernel.z;
  if (z.imag() == 0.0 && z.real() >= 0.0) {
    fail(ErrorKind::PoleOnSupport, "resolvent point z = " + format_double(z.real()) +
                                       " lies on the support [0, ∞)");
  }
  quad::Options part = opt;
  part.abs_tol = opt.abs_tol / static_cast<double>(component_count(sigma));

  std::complex<double> value{};
  double error = 0.0;

  for (const auto& atom : sigma.atoms()) value += atom.w * resolvent_kernel(z, atom.t);

  for (const auto& piece : sigma.pieces()) {
    if (is_table(piece)) {
      const auto& table = std::get<Table>(piece.kind);
      for (std::size_t s = 0; s + 1 < table.knots.size(); ++s) {
        auto r = quad::integrate<std::complex<double>>(
            [&](double t) { return table_density(table, s, t) * resolvent_kernel(z, t); },
            table.knots[s], table.knots[s + 1], part);
        value += r.value;
        error += r.error;
      }
      continue;
    }
    const auto law = as_power_law(piece);
    if (law.coeff == 0.0) continue;
    auto r = power_integral<std::complex<double>>(
        piece.lo, piece.hi, law.coeff, law.exponent,
        [&](double t) { return resolvent_kernel(z, t); }, part);
    value += r.value;
    error += r.error;
  }

  if (const auto& tail = sigma.tail()) {
    auto r = tail_integral<std::complex<double>>(
        *tail, [&](double w) { return resolvent_tail_factor(z, w); }, part);
    value += r.value;
    error += r.error;
  }
  return {value, error};
}

Moments moments(const SpectralMeasure& sigma, const quad::Options& opt) {
  const auto a = integrate_weighted(sigma, RealKernel::InvOnePlusT, opt);
  const auto b = integrate_weighted(sigma, RealKernel::InvT, opt);
  const auto i2 = integrate_weighted(sigma, RealKernel::InvOnePlusT2, opt);
  return Moments{a.value.value(), b.value, i2.value.value(), a.error, b.error, i2.error};
}

ClassTag classify(const SpectralMeasure& sigma, double gamma, const quad::Options& opt) {
  if (!std::isfinite(gamma)) {
    throw Error(ErrorKind::InvalidArgument, kModule, "free term γ must be finite");
  }
  if (!sigma.declared_infinite_mass()) {
    fail(ErrorKind::NotSL0,
         "∫dσ = ∞ is not asserted (set infinite_mass with a tail t^(-s), s <= 1)");
  }
  const auto b = integrate_weighted(sigma, RealKernel::InvT, opt);
  return ClassTag{b.value.is_infinite() ? ClassKind::SL0K : ClassKind::SL01K, gamma >= 0.0};
}

}  // namespace slr
