#include "pinch/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace pinch {

namespace {

double log2_1p(double x) { return std::log1p(x) / std::numbers::ln2; }

double coupling_scale(const SystemConfig& cfg) {
    const double lambda = cfg.wavelength();
    const double d2 = cfg.d * cfg.d;
    return lambda * lambda * lambda /
           (std::numbers::pi * std::numbers::pi * d2 * d2 * d2 * cfg.height);
}

std::vector<double> all_strengths(const UserDrop& drop, const SystemConfig& cfg) {
    std::vector<double> a(static_cast<size_t>(drop.size()));
    for (int k = 0; k < drop.size(); ++k) a[static_cast<size_t>(k)] = channel_strength(drop, k, cfg);
    return a;
}

// Shared body of the model and its bounds: coupling_sq supplies T^2 for
// a user pair (constant 0 and 16 reproduce the two bounds).
template <typename CouplingSq>
double model_se(const UserDrop& drop, const SystemConfig& cfg, double pt_w,
                CouplingSq coupling_sq) {
    const int n = drop.size();
    const std::vector<double> a = all_strengths(drop, cfg);
    const double scale = coupling_scale(cfg);
    const double p_stream = pt_w / n;
    double total = 0.0;
    for (int k = 0; k < n; ++k) {
        double interf = 0.0;
        for (int kp = 0; kp < n; ++kp) {
            if (kp == k) continue;
            interf += p_stream * scale * coupling_sq(k, kp) / a[static_cast<size_t>(kp)];
        }
        const double noise = cfg.noise_w / cfg.channel_gain();
        total += log2_1p(p_stream * a[static_cast<size_t>(k)] / (interf + noise));
    }
    return total;
}

}  // namespace

double t_factor(int k, int kp, const SystemConfig& cfg) {
    if (k == kp) throw std::invalid_argument("t_factor: defined for distinct waveguides only");
    const double delta = static_cast<double>(k - kp);
    const double base = 2.0 * std::numbers::pi / cfg.wavelength();
    // Phase reference of the stationary-point value of the self-coupling
    // integral: 2*pi*D/lambda + pi/4, plus the pi/2 carried by the j in
    // the endpoint form. Taking the real part of the rotated cross terms
    // leaves cosines measured against this offset.
    const double ref = base * cfg.height + 0.75 * std::numbers::pi;
    const double up = delta + 0.5;
    const double lo = delta - 0.5;
    const double dist_up = std::sqrt(up * up * cfg.d * cfg.d + cfg.height * cfg.height);
    const double dist_lo = std::sqrt(lo * lo * cfg.d * cfg.d + cfg.height * cfg.height);
    return std::cos(base * dist_up - ref) / up - std::cos(base * dist_lo - ref) / lo;
}

double avg_interference_approx(int k, int kp, const SystemConfig& cfg) {
    const double t = t_factor(k, kp, cfg);
    return coupling_scale(cfg) * t * t;
}

double channel_strength(const UserDrop& drop, int k, const SystemConfig& cfg) {
    double a = 0.0;
    for (int i = 0; i < drop.size(); ++i) {
        const double dist = user_antenna_distance(cfg, drop.users[static_cast<size_t>(k)], i,
                                                  drop.users[static_cast<size_t>(i)].y);
        a += 1.0 / (dist * dist);
    }
    return a;
}

double se_distributed_approx_at(const UserDrop& drop, const SystemConfig& cfg, double pt_w) {
    return model_se(drop, cfg, pt_w, [&](int k, int kp) {
        const double t = t_factor(k, kp, cfg);
        return t * t;
    });
}

double se_upper_bound_at(const UserDrop& drop, const SystemConfig& cfg, double pt_w) {
    return model_se(drop, cfg, pt_w, [](int, int) { return 0.0; });
}

double se_lower_bound_at(const UserDrop& drop, const SystemConfig& cfg, double pt_w) {
    // |T| <= 4 over all geometries, so T^2 = 16 floors the SINR.
    return model_se(drop, cfg, pt_w, [](int, int) { return 16.0; });
}

double se_distributed_approx(const UserDrop& drop, const SystemConfig& cfg) {
    return se_distributed_approx_at(drop, cfg, cfg.pt_w);
}

double se_upper_bound(const UserDrop& drop, const SystemConfig& cfg) {
    return se_upper_bound_at(drop, cfg, cfg.pt_w);
}

double se_lower_bound(const UserDrop& drop, const SystemConfig& cfg) {
    return se_lower_bound_at(drop, cfg, cfg.pt_w);
}

}  // namespace pinch
