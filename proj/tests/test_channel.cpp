#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "pinch/channel.hpp"
#include "pinch/placement.hpp"
#include "pinch/sampling.hpp"

using namespace pinch;

namespace {

// Long-double reference response: amplitude sqrt(eta)/dist, phase from
// the free-space path plus the in-guide path from the feed at -L/2.
std::complex<double> reference_channel(const SystemConfig& cfg, const Point3& user, int wg,
                                       double pa_y) {
    const long double dist =
        std::hypot(static_cast<long double>(user.x - cfg.waveguide_x(wg)),
                   static_cast<long double>(user.y - pa_y),
                   static_cast<long double>(cfg.height - user.z));
    const long double guide = pa_y + cfg.length / 2.0;
    long double cycles = dist / static_cast<long double>(cfg.wavelength()) +
                         guide / static_cast<long double>(cfg.guided_wavelength());
    cycles -= std::roundl(cycles);
    const long double phase = -2.0L * std::numbers::pi_v<long double> * cycles;
    const long double amp = std::sqrt(static_cast<long double>(cfg.channel_gain())) / dist;
    return {static_cast<double>(amp * std::cos(phase)), static_cast<double>(amp * std::sin(phase))};
}

}  // namespace

TEST_CASE("single-antenna response has the right amplitude and phase") {
    SystemConfig cfg;
    const Point3 user{1.3, -2.1, 0.0};
    for (const double pa_y : {-4.0, -0.5, 0.0, 2.25, 4.9}) {
        for (int wg = 0; wg < cfg.n; ++wg) {
            const auto h = pinching_channel(cfg, user, wg, pa_y);
            const double dist = user_antenna_distance(cfg, user, wg, pa_y);
            CHECK(std::abs(h) ==
                  doctest::Approx(std::sqrt(cfg.channel_gain()) / dist).epsilon(1e-13));
            const auto ref = reference_channel(cfg, user, wg, pa_y);
            CHECK(std::abs(h - ref) <= 1e-10 * std::abs(ref));
        }
    }
}

TEST_CASE("antennas one guided wavelength apart radiate in phase at the nadir") {
    SystemConfig cfg;
    // User directly under the antenna pair's midpoint: free-space paths
    // are equal, so only the in-guide paths (one guided wavelength apart)
    // distinguish the two responses.
    const double y0 = 0.5;
    const double spacing = cfg.guided_wavelength();
    const Point3 user{0.0, y0 + spacing / 2.0, 0.0};
    const auto h1 = pinching_channel(cfg, user, 0, y0);
    const auto h2 = pinching_channel(cfg, user, 0, y0 + spacing);
    CHECK(std::arg(h1 / h2) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("channel matrix matches per-element responses") {
    SystemConfig cfg;
    const UserDrop drop = sample_users(cfg, 3, false);
    const PaPlacement p = distributed_nearest(drop, cfg);
    const ChannelMatrix m = distributed_channel_matrix(drop, p, cfg);
    REQUIRE(m.n_users == cfg.n);
    REQUIRE(m.n_wg == cfg.n);
    for (int k = 0; k < cfg.n; ++k) {
        for (int i = 0; i < cfg.n; ++i) {
            const auto want = pinching_channel(cfg, drop.users[static_cast<size_t>(k)], i,
                                               p.pa_y[static_cast<size_t>(i)][0]);
            CHECK(std::abs(m.at(k, i) - want) == 0.0);
        }
    }
}

TEST_CASE("channel matrix rejects placements without one antenna per guide") {
    SystemConfig cfg;
    const UserDrop drop = sample_users(cfg, 3, false);
    PaPlacement p = distributed_nearest(drop, cfg);
    p.pa_y[2].push_back(0.0);
    CHECK_THROWS_AS(distributed_channel_matrix(drop, p, cfg), std::invalid_argument);
    p.pa_y[2].clear();
    CHECK_THROWS_AS(distributed_channel_matrix(drop, p, cfg), std::invalid_argument);
}

TEST_CASE("array response is the coherent sum of element responses") {
    SystemConfig cfg;
    const Point3 user{2.2, 0.7, 0.0};
    const std::vector<double> ys = {0.1, 0.2, 0.35};
    std::complex<double> manual = 0.0;
    for (const double y : ys) manual += pinching_channel(cfg, user, 1, y);
    CHECK(std::abs(array_response_sum(cfg, user, 1, ys) - manual) == 0.0);
}

TEST_CASE("nearest waveguide clamps to the deployed range") {
    SystemConfig cfg;
    CHECK(nearest_waveguide(cfg, {0.9, 0.0, 0.0}) == 0);
    CHECK(nearest_waveguide(cfg, {1.1, 0.0, 0.0}) == 1);
    CHECK(nearest_waveguide(cfg, {-25.0, 0.0, 0.0}) == 0);
    CHECK(nearest_waveguide(cfg, {125.0, 0.0, 0.0}) == cfg.n - 1);
}
