#include "pinch/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "pinch/phase.hpp"

namespace pinch {

std::complex<double> pinching_channel(const SystemConfig& cfg, const Point3& user,
                                      int wg, double pa_y) {
    const double dist = user_antenna_distance(cfg, user, wg, pa_y);
    const double guide_len = pa_y + cfg.length / 2.0;  // feed sits at y = -L/2
    const double phase = wave_phase(dist, cfg.wavelength()) +
                         wave_phase(guide_len, cfg.guided_wavelength());
    const double amp = std::sqrt(cfg.channel_gain()) / dist;
    return amp * unit_phasor(phase);
}

ChannelMatrix distributed_channel_matrix(const UserDrop& drop, const PaPlacement& placement,
                                         const SystemConfig& cfg) {
    if (static_cast<int>(placement.pa_y.size()) != cfg.n)
        throw std::invalid_argument("channel: placement must cover every waveguide");
    ChannelMatrix m;
    m.n_users = drop.size();
    m.n_wg = cfg.n;
    m.h.resize(static_cast<size_t>(m.n_users) * m.n_wg);
    for (int i = 0; i < cfg.n; ++i) {
        if (placement.pa_y[static_cast<size_t>(i)].size() != 1)
            throw std::invalid_argument("channel: need exactly one antenna per waveguide");
    }
    for (int k = 0; k < m.n_users; ++k) {
        for (int i = 0; i < m.n_wg; ++i) {
            m.at(k, i) = pinching_channel(cfg, drop.users[static_cast<size_t>(k)], i,
                                          placement.pa_y[static_cast<size_t>(i)][0]);
        }
    }
    return m;
}

std::complex<double> array_response_sum(const SystemConfig& cfg, const Point3& user,
                                        int wg, const std::vector<double>& pa_ys) {
    std::complex<double> sum = 0.0;
    for (const double y : pa_ys) sum += pinching_channel(cfg, user, wg, y);
    return sum;
}

}  // namespace pinch
