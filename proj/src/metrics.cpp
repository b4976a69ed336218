#include "pinch/metrics.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "pinch/asymptotics.hpp"

namespace pinch {

namespace {

double log2_1p(double x) { return std::log1p(x) / std::numbers::ln2; }

// Distance from user k to the single antenna of a nearest-point layout
// on waveguide i (the antenna sits at user i's y).
double reference_distance(const UserDrop& drop, int k, int i, const SystemConfig& cfg) {
    return user_antenna_distance(cfg, drop.users[static_cast<size_t>(k)], i,
                                 drop.users[static_cast<size_t>(i)].y);
}

}  // namespace

SeResult se_distributed_exact(const ChannelMatrix& m, const BeamformerSet& beams,
                              const std::vector<double>& stream_power, const SystemConfig& cfg) {
    if (beams.n_wg != m.n_wg || beams.n_users != m.n_users)
        throw std::invalid_argument("se: beamformer/channel shape mismatch");
    if (static_cast<int>(stream_power.size()) != m.n_users)
        throw std::invalid_argument("se: one power entry per stream required");

    const int n = m.n_users;
    SeResult r;
    r.n_users = n;
    r.per_user_se.resize(static_cast<size_t>(n));
    r.per_user_sinr.resize(static_cast<size_t>(n));
    r.interference.resize(static_cast<size_t>(n) * n);

    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) {
            std::complex<double> gain = 0.0;
            for (int i = 0; i < m.n_wg; ++i) gain += m.at(k, i) * beams.at(i, j);
            r.interference[static_cast<size_t>(k) * n + j] =
                stream_power[static_cast<size_t>(j)] * std::norm(gain);
        }
    }
    for (int k = 0; k < n; ++k) {
        double interf = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j != k) interf += r.power(k, j);
        }
        const double sinr = r.power(k, k) / (interf + cfg.noise_w);
        r.per_user_sinr[static_cast<size_t>(k)] = sinr;
        r.per_user_se[static_cast<size_t>(k)] = log2_1p(sinr);
        r.total_se += r.per_user_se[static_cast<size_t>(k)];
    }
    return r;
}

SeResult se_distributed_mrt(const UserDrop& drop, const PaPlacement& placement,
                            const SystemConfig& cfg) {
    const ChannelMatrix m = distributed_channel_matrix(drop, placement, cfg);
    return se_distributed_exact(m, mrt_beamformer(m), uniform_power(cfg, m.n_users), cfg);
}

SeResult se_distributed_zf(const UserDrop& drop, const PaPlacement& placement,
                           const SystemConfig& cfg) {
    const ChannelMatrix m = distributed_channel_matrix(drop, placement, cfg);
    return se_distributed_exact(m, zf_beamformer(m), uniform_power(cfg, m.n_users), cfg);
}

double se_zf_closed(double zf_alpha, const SystemConfig& cfg) {
    return cfg.n * log2_1p(zf_alpha * cfg.pt_w / (cfg.n * cfg.noise_w));
}

double se_centralized_exact(const UserDrop& drop, const SystemConfig& cfg, int n_pas) {
    double total = 0.0;
    for (int k = 0; k < drop.size(); ++k) {
        const Point3& user = drop.users[static_cast<size_t>(k)];
        const int wg = nearest_waveguide(cfg, user);
        const PaPlacement p = centralized_inphase(user, wg, n_pas, cfg);
        const std::complex<double> sum =
            array_response_sum(cfg, user, wg, p.pa_y[static_cast<size_t>(wg)]);
        const double snr = (cfg.pt_w / cfg.n) * std::norm(sum) / cfg.noise_w;
        total += log2_1p(snr);
    }
    return total / cfg.n;
}

double se_centralized_closed(const UserDrop& drop, const SystemConfig& cfg, int n_pas) {
    double total = 0.0;
    for (int k = 0; k < drop.size(); ++k) {
        const Point3& user = drop.users[static_cast<size_t>(k)];
        const int wg = nearest_waveguide(cfg, user);
        const double dist = user_antenna_distance(cfg, user, wg, user.y);
        const double gain = static_cast<double>(n_pas) * n_pas * cfg.channel_gain() / (dist * dist);
        total += log2_1p((cfg.pt_w / cfg.n) * gain / cfg.noise_w);
    }
    return total / cfg.n;
}

double se_general(const UserDrop& drop, const SystemConfig& cfg, int i_users, int q_pas) {
    if (i_users < 1 || q_pas < 1 || i_users * q_pas != cfg.n)
        throw std::invalid_argument("se_general: streams * antennas-per-stream must equal n");
    if (drop.size() != i_users)
        throw std::invalid_argument("se_general: drop must hold one user per stream");

    std::vector<double> strength(static_cast<size_t>(i_users), 0.0);
    for (int k = 0; k < i_users; ++k) {
        for (int i = 0; i < i_users; ++i) {
            const double dist = reference_distance(drop, k, i, cfg);
            strength[static_cast<size_t>(k)] += 1.0 / (dist * dist);
        }
    }

    const double p_stream = cfg.pt_w / i_users;
    double total = 0.0;
    for (int k = 0; k < i_users; ++k) {
        double interf = 0.0;
        for (int kp = 0; kp < i_users; ++kp) {
            if (kp == k) continue;
            interf += p_stream * avg_interference_approx(k, kp, cfg) /
                      strength[static_cast<size_t>(kp)];
        }
        const double noise = cfg.noise_w / (cfg.channel_gain() * q_pas);
        total += log2_1p(p_stream * strength[static_cast<size_t>(k)] / (interf + noise));
    }
    return total;
}

double se_equal_spacing(const UserDrop& drop, const SystemConfig& cfg, int n_pas) {
    double total = 0.0;
    for (int k = 0; k < drop.size(); ++k) {
        const Point3& user = drop.users[static_cast<size_t>(k)];
        const int wg = nearest_waveguide(cfg, user);
        const PaPlacement p = equal_spacing(wg, n_pas, cfg);
        const std::complex<double> sum =
            array_response_sum(cfg, user, wg, p.pa_y[static_cast<size_t>(wg)]);
        total += log2_1p((cfg.pt_w / cfg.n) * std::norm(sum) / cfg.noise_w);
    }
    return total / cfg.n;
}

double se_equal_spacing_literal(const UserDrop& drop, const SystemConfig& cfg, int n_pas) {
    double total = 0.0;
    for (int k = 0; k < drop.size(); ++k) {
        const Point3& user = drop.users[static_cast<size_t>(k)];
        const int wg = nearest_waveguide(cfg, user);
        const PaPlacement p = equal_spacing(wg, n_pas, cfg);
        double amp = 0.0;
        for (const double y : p.pa_y[static_cast<size_t>(wg)])
            amp += 1.0 / user_antenna_distance(cfg, user, wg, y);
        // Aggregate-gain model: phases assumed fully recoverable, so the
        // amplitude sum squares coherently.
        const double gain = cfg.channel_gain() * amp * amp;
        total += log2_1p((cfg.pt_w / cfg.n) * gain / cfg.noise_w);
    }
    return total / cfg.n;
}

double energy_efficiency(double se, int n_rf, double p_rf_w, double pt_w) {
    return se / (n_rf * p_rf_w + pt_w);
}

}  // namespace pinch
