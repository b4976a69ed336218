#pragma once

#include <complex>
#include <vector>

#include "pinch/channel.hpp"
#include "pinch/config.hpp"

namespace pinch {

/// Transmit beams, one column per user stream: w[i*n_users + k] is the
/// weight on waveguide i for user k's stream.
struct BeamformerSet {
    int n_wg = 0;
    int n_users = 0;
    std::vector<std::complex<double>> w;
    double zf_alpha = 0.0;  // gain constant of the zero-forcing solution

    std::complex<double>& at(int wg, int user) { return w[static_cast<size_t>(wg) * n_users + user]; }
    const std::complex<double>& at(int wg, int user) const {
        return w[static_cast<size_t>(wg) * n_users + user];
    }
};

/// Matched beams w_k = conj(h_k)/||h_k||; unit norm per stream.
BeamformerSet mrt_beamformer(const ChannelMatrix& m);

/// Interference-nulling beams: W = sqrt(alpha) * M^{-1} for the square
/// user-by-waveguide matrix M, alpha = n / ||M^{-1}||_F^2 so that the
/// stream norms sum to n. Solved in extended precision with one
/// refinement pass; cross-user gains land at the double-precision noise
/// floor. Throws std::runtime_error on a singular geometry.
BeamformerSet zf_beamformer(const ChannelMatrix& m);

/// Uniform allocation p_k = pt / streams used throughout.
std::vector<double> uniform_power(const SystemConfig& cfg, int streams);

}  // namespace pinch
