#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pinch/config.hpp"

namespace pinch {

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// One realization of user positions on the ground plane (z = 0).
/// User k is associated with waveguide k by construction of the sampler.
struct UserDrop {
    std::vector<Point3> users;
    int size() const { return static_cast<int>(users.size()); }
};

inline double distance(const Point3& a, const Point3& b) {
    return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

/// Distance from user r to the antenna at (waveguide_x(i), pa_y, height).
inline double user_antenna_distance(const SystemConfig& cfg, const Point3& r,
                                    int wg, double pa_y) {
    return std::hypot(r.x - cfg.waveguide_x(wg), r.y - pa_y, cfg.height - r.z);
}

/// Index of the waveguide whose axis is closest to r.
inline int nearest_waveguide(const SystemConfig& cfg, const Point3& r) {
    const double idx = std::round(r.x / cfg.d);
    const double clamped = std::min(std::max(idx, 0.0), static_cast<double>(cfg.n - 1));
    return static_cast<int>(clamped);
}

}  // namespace pinch
