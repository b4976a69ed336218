#include "pinch/placement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pinch/rng.hpp"

namespace pinch {

void PaPlacement::check_bounds(const SystemConfig& cfg) const {
    const double half = cfg.length / 2.0;
    for (size_t i = 0; i < pa_y.size(); ++i) {
        for (const double y : pa_y[i]) {
            if (!(y >= -half && y <= half))
                throw std::out_of_range("placement: antenna at y=" + std::to_string(y) +
                                        " on waveguide " + std::to_string(i) +
                                        " leaves the guide [-L/2, L/2]");
        }
    }
}

PaPlacement centralized_inphase(const Point3& user, int serving_wg, int n_pas,
                                const SystemConfig& cfg) {
    if (n_pas < 1) throw std::invalid_argument("placement: n_pas must be >= 1");
    if (serving_wg < 0 || serving_wg >= cfg.n)
        throw std::invalid_argument("placement: serving waveguide out of range");

    const double spacing = cfg.antenna_spacing();
    std::vector<double> ys;
    ys.reserve(static_cast<size_t>(n_pas));
    if (n_pas % 2 == 1) {
        const int half = (n_pas - 1) / 2;
        for (int q = -half; q <= half; ++q) ys.push_back(user.y + q * spacing);
    } else {
        // Even count: symmetric window with the center element removed so
        // every element still sits an integer number of spacings from y.
        const int half = n_pas / 2;
        for (int q = -half; q <= half; ++q) {
            if (q != 0) ys.push_back(user.y + q * spacing);
        }
    }
    std::sort(ys.begin(), ys.end());

    PaPlacement p;
    p.mode = PlacementMode::centralized;
    p.serving_wg = serving_wg;
    p.pa_y.assign(static_cast<size_t>(cfg.n), {});
    p.pa_y[static_cast<size_t>(serving_wg)] = std::move(ys);
    const double half_len = cfg.length / 2.0;
    for (const double y : p.pa_y[static_cast<size_t>(serving_wg)]) {
        if (!(y >= -half_len && y <= half_len))
            throw std::invalid_argument(
                "placement: in-phase window around y=" + std::to_string(user.y) +
                " clips the guide end; shrink the window or the sampling span");
    }
    return p;
}

PaPlacement distributed_nearest(const UserDrop& drop, const SystemConfig& cfg) {
    if (drop.size() != cfg.n)
        throw std::invalid_argument("placement: one user per waveguide required");
    PaPlacement p;
    p.mode = PlacementMode::distributed;
    p.pa_y.resize(static_cast<size_t>(cfg.n));
    for (int i = 0; i < cfg.n; ++i)
        p.pa_y[static_cast<size_t>(i)] = {drop.users[static_cast<size_t>(i)].y};
    p.check_bounds(cfg);
    return p;
}

PaPlacement equal_spacing(int serving_wg, int n_pas, const SystemConfig& cfg) {
    if (n_pas < 1) throw std::invalid_argument("placement: n_pas must be >= 1");
    if (serving_wg < 0 || serving_wg >= cfg.n)
        throw std::invalid_argument("placement: serving waveguide out of range");
    PaPlacement p;
    p.mode = PlacementMode::baseline_equal;
    p.serving_wg = serving_wg;
    p.pa_y.assign(static_cast<size_t>(cfg.n), {});
    auto& ys = p.pa_y[static_cast<size_t>(serving_wg)];
    if (n_pas == 1) {
        ys = {0.0};
    } else {
        for (int q = 0; q < n_pas; ++q)
            ys.push_back(-cfg.length / 2.0 + q * cfg.length / (n_pas - 1));
    }
    p.check_bounds(cfg);
    return p;
}

PaPlacement random_reference(const UserDrop& drop, std::uint64_t seed,
                             const SystemConfig& cfg) {
    if (drop.size() != cfg.n)
        throw std::invalid_argument("placement: one user per waveguide required");
    Rng rng = make_stream(seed, 0x9a1ecull);
    PaPlacement p;
    p.mode = PlacementMode::baseline_random;
    p.pa_y.resize(static_cast<size_t>(cfg.n));
    for (int i = 0; i < cfg.n; ++i)
        p.pa_y[static_cast<size_t>(i)] = {rng.uniform(-cfg.length / 2.0, cfg.length / 2.0)};
    p.check_bounds(cfg);
    return p;
}

DeviationPair deviation_design_two_users(const UserDrop& drop, const SystemConfig& cfg) {
    if (cfg.n != 2 || drop.size() != 2)
        throw std::invalid_argument("deviation design: exactly two users/waveguides required");
    const Point3& u0 = drop.users[0];
    const Point3& u1 = drop.users[1];
    if (u0.y == u1.y)
        throw DegenerateGeometry(
            "deviation design: users share the same y, so moving the antennas along the "
            "guides cannot change the cross-path length difference; no solution exists");

    // Distances with the antennas at the users' own y values.
    const double d00 = user_antenna_distance(cfg, u0, 0, u0.y);
    const double d11 = user_antenna_distance(cfg, u1, 1, u1.y);
    const double d01 = user_antenna_distance(cfg, u0, 1, u1.y);
    const double d10 = user_antenna_distance(cfg, u1, 0, u0.y);

    const double lambda = cfg.wavelength();
    // Antiphase condition on the round-trip path difference:
    // (d00 + d11) - (d01 + d10) == lambda/2 + z*lambda after the move.
    // Own-guide distances are stationary in the antenna y, so only the
    // cross terms respond; to first order a move of -delta on guide j
    // changes d_kj by delta * (y_k - y_j) / d_kj.
    const double lhs0 = d00 + d11 - d01 - d10;
    const long z = std::lround((lhs0 - lambda / 2.0) / lambda);
    const double target = lhs0 - lambda / 2.0 - static_cast<double>(z) * lambda;

    DeviationPair dev;
    dev.branch = z;
    dev.delta2 = target / (2.0 * (u0.y - u1.y) / d01);
    dev.delta1 = -dev.delta2 * d10 / d01;

    // Exact (non-linearized) residual of the condition after the move.
    const double e00 = user_antenna_distance(cfg, u0, 0, u0.y - dev.delta1);
    const double e11 = user_antenna_distance(cfg, u1, 1, u1.y - dev.delta2);
    const double e01 = user_antenna_distance(cfg, u0, 1, u1.y - dev.delta2);
    const double e10 = user_antenna_distance(cfg, u1, 0, u0.y - dev.delta1);
    dev.residual = (e00 + e11 - e01 - e10) - (lambda / 2.0 + static_cast<double>(z) * lambda);
    return dev;
}

PaPlacement apply_deviation(const PaPlacement& nearest, const DeviationPair& dev) {
    if (nearest.pa_y.size() != 2 || nearest.pa_y[0].size() != 1 || nearest.pa_y[1].size() != 1)
        throw std::invalid_argument("deviation: needs a two-waveguide nearest-point placement");
    PaPlacement p = nearest;
    p.pa_y[0][0] -= dev.delta1;
    p.pa_y[1][0] -= dev.delta2;
    return p;
}

}  // namespace pinch
