#pragma once

#include <numbers>

#include "slr/measure.hpp"
#include "slr/stieltjes.hpp"

namespace slr::fixtures {

/// dσ/dt = 1/(π sqrt t) on (0, ∞): V(z) = i/sqrt(z).
inline SpectralMeasure inverse_sqrt_measure() {
  const double c = 1.0 / std::numbers::pi;
  return SpectralMeasure({}, {DensityPiece{0.0, 1.0, PowerLaw{c, -0.5}}}, PowerTail{1.0, c, 0.5},
                         true);
}

inline StieltjesLikeFunction inverse_sqrt_function(double gamma = 0.0) {
  return {inverse_sqrt_measure(), gamma};
}

/// dσ/dt = 3 t^(-3/2) on [1, ∞): ∫dσ/t = 2 but finite total mass.
inline SpectralMeasure b2_finite_mass_measure() {
  return SpectralMeasure({}, {}, PowerTail{1.0, 3.0, 1.5}, false);
}

/// dσ/dt = t^(-1/2) on [1, ∞): ∫dσ/t = 2 with infinite total mass.
inline SpectralMeasure b2_measure() { return SpectralMeasure({}, {}, PowerTail{1.0, 1.0, 0.5}, true); }

}  // namespace slr::fixtures
