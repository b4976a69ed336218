#include "pinch/beamforming.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace pinch {

BeamformerSet mrt_beamformer(const ChannelMatrix& m) {
    BeamformerSet b;
    b.n_wg = m.n_wg;
    b.n_users = m.n_users;
    b.w.resize(static_cast<size_t>(m.n_wg) * m.n_users);
    for (int k = 0; k < m.n_users; ++k) {
        double norm_sq = 0.0;
        for (int i = 0; i < m.n_wg; ++i) norm_sq += std::norm(m.at(k, i));
        if (!(norm_sq > 0.0)) throw std::runtime_error("beamforming: zero channel row");
        const double inv_norm = 1.0 / std::sqrt(norm_sq);
        for (int i = 0; i < m.n_wg; ++i) b.at(i, k) = std::conj(m.at(k, i)) * inv_norm;
    }
    return b;
}

BeamformerSet zf_beamformer(const ChannelMatrix& m) {
    if (m.n_users != m.n_wg)
        throw std::invalid_argument("zero-forcing: square user-by-waveguide matrix required");
    const int n = m.n_users;

    using CLD = std::complex<long double>;
    using MatLD = Eigen::Matrix<CLD, Eigen::Dynamic, Eigen::Dynamic>;

    MatLD a(n, n);  // a(k, i): user k, waveguide i
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            a(k, i) = CLD(m.at(k, i).real(), m.at(k, i).imag());

    // Inverse in extended precision with one refinement pass; the
    // cross-stream gains then sit at the double-precision noise floor.
    Eigen::PartialPivLU<MatLD> lu(a);
    MatLD inv = lu.solve(MatLD::Identity(n, n));
    inv += lu.solve(MatLD::Identity(n, n) - a * inv);

    const MatLD residual = a * inv - MatLD::Identity(n, n);
    long double max_resid = 0.0L;
    long double inv_norm_sq = 0.0L;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            max_resid = std::max(max_resid, std::abs(residual(r, c)));
            inv_norm_sq += std::norm(inv(r, c));
        }
    }
    if (!(max_resid < 1e-6L) || !std::isfinite(static_cast<double>(inv_norm_sq)))
        throw std::runtime_error("zero-forcing: singular or near-singular geometry");

    const long double alpha = static_cast<long double>(n) / inv_norm_sq;
    const long double scale = std::sqrt(alpha);

    BeamformerSet b;
    b.n_wg = n;
    b.n_users = n;
    b.zf_alpha = static_cast<double>(alpha);
    b.w.resize(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            b.at(i, k) = std::complex<double>(static_cast<double>(scale * inv(i, k).real()),
                                              static_cast<double>(scale * inv(i, k).imag()));
    return b;
}

std::vector<double> uniform_power(const SystemConfig& cfg, int streams) {
    if (streams < 1) throw std::invalid_argument("power: streams must be >= 1");
    return std::vector<double>(static_cast<size_t>(streams), cfg.pt_w / streams);
}

}  // namespace pinch
