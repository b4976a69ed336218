#include "pinch/sampling.hpp"

#include <stdexcept>

#include "pinch/rng.hpp"

namespace pinch {

double sampling_margin(const SystemConfig& cfg) {
    return static_cast<double>(cfg.n) * cfg.antenna_spacing();
}

UserDrop sample_users(const SystemConfig& cfg, std::uint64_t seed, bool worst_case_y) {
    const double margin = sampling_margin(cfg);
    const double y_lo = -cfg.length / 2.0 + margin;
    const double y_hi = cfg.length / 2.0 - margin;
    if (!(y_lo < y_hi))
        throw std::invalid_argument("sampling: margin leaves no y span (increase L or reduce n)");

    Rng rng = make_stream(seed, 0);
    UserDrop drop;
    drop.users.resize(static_cast<size_t>(cfg.n));
    const double shared_y = rng.uniform(y_lo, y_hi);
    for (int k = 0; k < cfg.n; ++k) {
        const double xc = cfg.waveguide_x(k);
        drop.users[static_cast<size_t>(k)].x = rng.uniform(xc - cfg.d / 2.0, xc + cfg.d / 2.0);
        drop.users[static_cast<size_t>(k)].y = worst_case_y ? shared_y : rng.uniform(y_lo, y_hi);
        drop.users[static_cast<size_t>(k)].z = 0.0;
    }
    return drop;
}

UserDrop fixed_drop(const SystemConfig& cfg, const std::vector<double>& x, double shared_y) {
    return fixed_drop_xy(cfg, x, std::vector<double>(x.size(), shared_y));
}

UserDrop fixed_drop_xy(const SystemConfig& cfg, const std::vector<double>& x,
                       const std::vector<double>& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("fixed_drop: x and y length mismatch");
    if (static_cast<int>(x.size()) != cfg.n)
        throw std::invalid_argument("fixed_drop: need exactly n users");
    UserDrop drop;
    drop.users.resize(x.size());
    for (size_t k = 0; k < x.size(); ++k) drop.users[k] = {x[k], y[k], 0.0};
    return drop;
}

}  // namespace pinch
