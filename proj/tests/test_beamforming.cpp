#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "pinch/beamforming.hpp"
#include "pinch/channel.hpp"
#include "pinch/placement.hpp"
#include "pinch/sampling.hpp"

using namespace pinch;

namespace {

ChannelMatrix scenario_matrix(const SystemConfig& cfg) {
    const UserDrop drop = fixed_drop(cfg, {-0.3, 2.4, 3.7, 6.2, 8.9}, 1.0);
    return distributed_channel_matrix(drop, distributed_nearest(drop, cfg), cfg);
}

std::complex<double> stream_gain(const ChannelMatrix& m, const BeamformerSet& b, int user,
                                 int stream) {
    std::complex<double> g = 0.0;
    for (int i = 0; i < m.n_wg; ++i) g += m.at(user, i) * b.at(i, stream);
    return g;
}

}  // namespace

TEST_CASE("matched beams have unit norm and real matched gain") {
    SystemConfig cfg;
    const ChannelMatrix m = scenario_matrix(cfg);
    const BeamformerSet b = mrt_beamformer(m);
    for (int k = 0; k < m.n_users; ++k) {
        double norm_sq = 0.0;
        for (int i = 0; i < m.n_wg; ++i) norm_sq += std::norm(b.at(i, k));
        CHECK(norm_sq == doctest::Approx(1.0).epsilon(1e-14));

        double h_norm_sq = 0.0;
        for (int i = 0; i < m.n_wg; ++i) h_norm_sq += std::norm(m.at(k, i));
        const auto g = stream_gain(m, b, k, k);
        CHECK(g.imag() == doctest::Approx(0.0).epsilon(1e-18));
        CHECK(g.real() == doctest::Approx(std::sqrt(h_norm_sq)).epsilon(1e-13));
    }
}

TEST_CASE("nulling beams reproduce the pinned gain constant") {
    SystemConfig cfg;
    const BeamformerSet b = zf_beamformer(scenario_matrix(cfg));
    CHECK(b.zf_alpha == doctest::Approx(5.10279676442996047e-09).epsilon(1e-10));
}

TEST_CASE("nulling beams leave cross-stream leakage at the noise floor") {
    SystemConfig cfg;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const UserDrop drop = sample_users(cfg, seed, false);
        const ChannelMatrix m =
            distributed_channel_matrix(drop, distributed_nearest(drop, cfg), cfg);
        const BeamformerSet b = zf_beamformer(m);
        const double scale = std::sqrt(b.zf_alpha);
        for (int k = 0; k < cfg.n; ++k) {
            const auto diag = stream_gain(m, b, k, k);
            CHECK(std::abs(diag - scale) <= 1e-12 * scale);
            for (int j = 0; j < cfg.n; ++j) {
                if (j == k) continue;
                const double leak = std::norm(stream_gain(m, b, k, j)) / std::norm(diag);
                CHECK(leak <= 1e-20);
            }
        }
    }
}

TEST_CASE("stream norms of the nulling solution sum to the stream count") {
    SystemConfig cfg;
    const BeamformerSet b = zf_beamformer(scenario_matrix(cfg));
    double total = 0.0;
    for (int k = 0; k < b.n_users; ++k)
        for (int i = 0; i < b.n_wg; ++i) total += std::norm(b.at(i, k));
    CHECK(total == doctest::Approx(static_cast<double>(cfg.n)).epsilon(1e-12));
}

TEST_CASE("nulling requires a square matrix") {
    SystemConfig cfg;
    ChannelMatrix m = scenario_matrix(cfg);
    m.n_users = 4;  // shape lie: rectangular systems are not supported
    CHECK_THROWS_AS(zf_beamformer(m), std::invalid_argument);
}

TEST_CASE("uniform power splits the budget evenly") {
    SystemConfig cfg;
    cfg.pt_w = 2e-3;
    const auto p = uniform_power(cfg, 4);
    REQUIRE(p.size() == 4);
    double total = 0.0;
    for (const double v : p) {
        CHECK(v == doctest::Approx(5e-4).epsilon(1e-15));
        total += v;
    }
    CHECK(total == doctest::Approx(cfg.pt_w).epsilon(1e-15));
    CHECK_THROWS_AS(uniform_power(cfg, 0), std::invalid_argument);
}
