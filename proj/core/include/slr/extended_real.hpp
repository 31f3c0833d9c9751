#pragma once

#include <limits>
#include <string>

namespace slr {

/// A real number or the single point at infinity.
///
/// Used for quantities that legitimately take the value infinity, such as
/// the integral of dσ/t for measures with mass near the origin, or the
/// extension parameter of a realizing system. Infinity is a tag, never a
/// floating-point sentinel: a finite ExtendedReal never holds inf or NaN.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  constexpr ExtendedReal(double value) : value_(value) {}  // NOLINT(implicit)

  static constexpr ExtendedReal infinity() {
    ExtendedReal r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_finite() const { return !infinite_; }
  constexpr bool is_infinite() const { return infinite_; }

  /// The finite value. Throws slr::Error(InvalidArgument) when infinite.
  double value() const;

  /// Finite value, or +inf for the infinite point. Only for arithmetic that
  /// is known to treat +inf correctly (comparisons, arctan limits).
  constexpr double to_double() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
  }

  /// "inf" or the shortest round-trip decimal form.
  std::string to_string() const;

  friend constexpr bool operator==(const ExtendedReal& lhs, const ExtendedReal& rhs) {
    if (lhs.infinite_ || rhs.infinite_) return lhs.infinite_ == rhs.infinite_;
    return lhs.value_ == rhs.value_;
  }

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double value);

}  // namespace slr
