#pragma once

#include <cstdint>
#include <vector>

#include "pinch/config.hpp"
#include "pinch/geometry.hpp"

namespace pinch {

/// y interval shrink applied when sampling user positions, sized so that
/// every centralized antenna window (up to n elements around a user's y)
/// stays inside the waveguide: n * antenna_spacing().
double sampling_margin(const SystemConfig& cfg);

/// Draws one user drop. x_k is uniform on [k*d - d/2, k*d + d/2] (so user
/// k is closest to waveguide k); y is uniform on the margin-shrunk span.
/// worst_case_y = true collapses all users onto one shared y value.
/// Deterministic in (cfg.seed-independent) explicit seed.
UserDrop sample_users(const SystemConfig& cfg, std::uint64_t seed, bool worst_case_y);

/// Non-random drop for pinned-geometry tests: explicit x list, shared y.
UserDrop fixed_drop(const SystemConfig& cfg, const std::vector<double>& x, double shared_y);

/// Non-random drop with per-user y values.
UserDrop fixed_drop_xy(const SystemConfig& cfg, const std::vector<double>& x,
                       const std::vector<double>& y);

}  // namespace pinch
