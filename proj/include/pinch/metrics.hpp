#pragma once

#include <vector>

#include "pinch/beamforming.hpp"
#include "pinch/channel.hpp"
#include "pinch/config.hpp"
#include "pinch/geometry.hpp"
#include "pinch/placement.hpp"

namespace pinch {

/// Per-user breakdown of a spectral-efficiency evaluation (b/s/Hz).
struct SeResult {
    double total_se = 0.0;
    std::vector<double> per_user_se;
    std::vector<double> per_user_sinr;
    // interference[k*n_users + j]: power user k receives from stream j
    // (diagonal holds the desired-signal power).
    std::vector<double> interference;
    int n_users = 0;

    double power(int rx_user, int stream) const {
        return interference[static_cast<size_t>(rx_user) * n_users + stream];
    }
};

/// Sum SE over simultaneous streams given explicit beams and per-stream
/// powers; the full cross-power table is retained for diagnostics.
SeResult se_distributed_exact(const ChannelMatrix& m, const BeamformerSet& beams,
                              const std::vector<double>& stream_power, const SystemConfig& cfg);

/// Matched-beam SE with one antenna per waveguide at each user's y,
/// computed from the channel matrix of `placement`.
SeResult se_distributed_mrt(const UserDrop& drop, const PaPlacement& placement,
                            const SystemConfig& cfg);

/// Interference-nulled SE; alpha reported via the returned SINRs
/// (all equal to alpha*pt/(n*sigma^2) when the geometry is well posed).
SeResult se_distributed_zf(const UserDrop& drop, const PaPlacement& placement,
                           const SystemConfig& cfg);

/// Closed-form SE of the nulling solution: n*log2(1 + alpha*pt/(n*sigma^2)).
double se_zf_closed(double zf_alpha, const SystemConfig& cfg);

/// Time-shared single-user service with n_pas in-phase antennas around
/// the user's nearest point; exact coherent field sum on the serving
/// waveguide.
double se_centralized_exact(const UserDrop& drop, const SystemConfig& cfg, int n_pas);

/// Same schedule with the coherent sum replaced by its closed form
/// n_pas^2 * eta / dist^2 at the user's nearest point.
double se_centralized_closed(const UserDrop& drop, const SystemConfig& cfg, int n_pas);

/// Hybrid split of cfg.n antennas into i_users simultaneous streams of
/// q_pas in-phase antennas each; i_users*q_pas must equal cfg.n.
double se_general(const UserDrop& drop, const SystemConfig& cfg, int i_users, int q_pas);

/// Time-shared service from n_pas antennas spread evenly along the
/// serving waveguide; exact coherent sum.
double se_equal_spacing(const UserDrop& drop, const SystemConfig& cfg, int n_pas);

/// Equal-spacing SE with the coherent sum replaced by the literal
/// aggregate-gain model eta*(sum_q 1/dist_q)^2 (phases assumed recoverable).
double se_equal_spacing_literal(const UserDrop& drop, const SystemConfig& cfg, int n_pas);

/// Bits per joule: se / (n_rf * p_rf_w + pt_w).
double energy_efficiency(double se, int n_rf, double p_rf_w, double pt_w);

}  // namespace pinch
