#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace pinch {

/// Propagation phase -2*pi*dist/wavelen reduced to (-pi, pi].
/// The integer wavelength count is removed with an exact fused
/// multiply-add before scaling, so the absolute phase error stays near
/// machine epsilon even when dist spans thousands of wavelengths. Both
/// spectral-efficiency evaluation routes share this helper; their
/// agreement budget depends on it.
inline double wave_phase(double dist, double wavelen) {
    const double cycles = dist / wavelen;
    const double whole = std::round(cycles);
    const double rem = std::fma(-whole, wavelen, dist);  // dist - whole*wavelen, exact
    return -2.0 * std::numbers::pi * (rem / wavelen);
}

inline std::complex<double> unit_phasor(double phase) {
    return {std::cos(phase), std::sin(phase)};
}

}  // namespace pinch
