#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pinch/config.hpp"
#include "pinch/geometry.hpp"

namespace pinch {

enum class PlacementMode { centralized, distributed, baseline_equal, baseline_random };

/// Antenna y-coordinates per waveguide. Centralized modes put every
/// antenna on one serving waveguide; distributed modes put exactly one
/// antenna on each waveguide.
struct PaPlacement {
    PlacementMode mode = PlacementMode::distributed;
    int serving_wg = -1;  // meaningful for centralized modes only
    std::vector<std::vector<double>> pa_y;

    void check_bounds(const SystemConfig& cfg) const;
};

struct DegenerateGeometry : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// In-phase array around the point of the serving waveguide closest to
/// the user: offsets q*spacing for q in {-(m-1)/2 .. (m-1)/2} when m is
/// odd; the center element is removed when m is even (q in +-1..+-m/2).
/// Throws std::invalid_argument when the window would leave the guide.
PaPlacement centralized_inphase(const Point3& user, int serving_wg, int n_pas,
                                const SystemConfig& cfg);

/// One antenna per waveguide at the y of its associated user (the closest
/// waveguide point).
PaPlacement distributed_nearest(const UserDrop& drop, const SystemConfig& cfg);

/// Antennas at -L/2 + q*L/(m-1), q = 0..m-1, on the serving waveguide.
PaPlacement equal_spacing(int serving_wg, int n_pas, const SystemConfig& cfg);

/// One antenna per waveguide at a seed-deterministic uniform y.
PaPlacement random_reference(const UserDrop& drop, std::uint64_t seed,
                             const SystemConfig& cfg);

struct DeviationPair {
    double delta1 = 0.0;
    double delta2 = 0.0;
    long branch = 0;       // integer branch picked for minimal deviation
    double residual = 0.0; // defining-equation residual [m]
};

/// Two-user deviation design: picks (delta1, delta2) that put the two
/// per-waveguide interference terms in antiphase, with the integer branch
/// minimizing max(|delta1|, |delta2|) and the split
/// delta1 = -delta2 * d21 / d12. Requires y1 != y2; the degenerate
/// shared-y geometry admits no solution and throws DegenerateGeometry.
DeviationPair deviation_design_two_users(const UserDrop& drop, const SystemConfig& cfg);

/// Applies the design to a nearest-point placement: antenna i moves to
/// y_i - delta_i. The minus sign matches the distance expansion the
/// design equation is derived from; tests pin the resulting interference
/// drop.
PaPlacement apply_deviation(const PaPlacement& nearest, const DeviationPair& dev);

}  // namespace pinch
