#pragma once

#include <cstdint>
#include <iosfwd>
#include <numbers>
#include <string>

namespace pinch {

inline constexpr double speed_of_light = 2.99792458e8;  // m/s

/// Immutable physical and geometric parameters of one simulation setup.
/// Derived quantities (wavelengths, channel gain) are recomputed from the
/// primary fields on every call so they can never drift out of sync.
struct SystemConfig {
    int n = 5;                // waveguides == users == total antennas
    double d = 2.0;           // waveguide spacing [m]
    double height = 5.0;      // waveguide height above the user plane [m]
    double length = 10.0;     // waveguide length [m]
    double fc_hz = 28e9;      // carrier frequency [Hz]
    double n_eff = 1.4;       // effective refractive index of the guide
    double noise_w = 1e-12;   // receiver noise power [W]
    double pt_w = 1e-3;       // total transmit power [W]
    std::uint64_t seed = 1;   // master seed for reproducible sampling

    double wavelength() const { return speed_of_light / fc_hz; }
    double guided_wavelength() const { return wavelength() / n_eff; }
    // In-phase antenna spacing on a guide; equals the guided wavelength.
    double antenna_spacing() const { return guided_wavelength(); }
    double channel_gain() const {
        const double r = wavelength() / (4.0 * std::numbers::pi);
        return r * r;
    }

    // x-coordinate of waveguide i, i in [0, n).
    double waveguide_x(int i) const { return static_cast<double>(i) * d; }

    /// Throws std::invalid_argument when any parameter is out of range.
    void validate() const;
};

double dbm_to_watt(double dbm);
double watt_to_dbm(double watt);

/// Parses a flat key=value stream. Keys: n, d, D, L, fc_hz, n_eff,
/// noise_dbm, pt_dbm, seed. '#' starts a comment. Unknown keys throw.
SystemConfig load_config(std::istream& in);
SystemConfig load_config_file(const std::string& path);

/// Applies one textual key=value override on top of an existing config.
void apply_override(SystemConfig& cfg, const std::string& key, const std::string& value);

/// Config snapshot in the same key=value syntax load_config accepts.
std::string config_snapshot(const SystemConfig& cfg);

}  // namespace pinch
