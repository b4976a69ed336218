#pragma once

#include <complex>
#include <vector>

#include "pinch/config.hpp"
#include "pinch/geometry.hpp"
#include "pinch/placement.hpp"

namespace pinch {

/// Line-of-sight response between one radiating antenna and one user:
/// amplitude sqrt(eta)/dist, phase = free-space path plus in-guide path
/// from the feed at y = -L/2 (guided wavelength = wavelength/n_eff).
std::complex<double> pinching_channel(const SystemConfig& cfg, const Point3& user,
                                      int wg, double pa_y);

/// Row-major user-by-waveguide channel matrix for a distributed placement
/// (one antenna per waveguide): h[k*n + i] = response of user k to the
/// antenna on waveguide i.
struct ChannelMatrix {
    int n_users = 0;
    int n_wg = 0;
    std::vector<std::complex<double>> h;

    std::complex<double>& at(int user, int wg) { return h[static_cast<size_t>(user) * n_wg + wg]; }
    const std::complex<double>& at(int user, int wg) const {
        return h[static_cast<size_t>(user) * n_wg + wg];
    }
};

ChannelMatrix distributed_channel_matrix(const UserDrop& drop, const PaPlacement& placement,
                                         const SystemConfig& cfg);

/// Coherent sum of the responses from every antenna of a single-waveguide
/// array to one user.
std::complex<double> array_response_sum(const SystemConfig& cfg, const Point3& user,
                                        int wg, const std::vector<double>& pa_ys);

}  // namespace pinch
