#include "pinch/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "pinch/accumulate.hpp"
#include "pinch/parallel.hpp"
#include "pinch/phase.hpp"
#include "pinch/rng.hpp"
#include "pinch/sampling.hpp"

namespace pinch {

namespace {

std::complex<double> coupling_kernel(double x, double center_x, double height, double lambda) {
    const double dx = x - center_x;
    const double r = std::sqrt(dx * dx + height * height);
    return unit_phasor(wave_phase(r, lambda)) / r;
}

std::complex<double> simpson(double a, double b, size_t panels, double center_x,
                             double height, double lambda) {
    const double h = (b - a) / static_cast<double>(2 * panels);
    std::complex<double> odd = 0.0;
    std::complex<double> even = 0.0;
    for (size_t j = 1; j < 2 * panels; ++j) {
        const double x = a + h * static_cast<double>(j);
        if (j % 2 == 1)
            odd += coupling_kernel(x, center_x, height, lambda);
        else
            even += coupling_kernel(x, center_x, height, lambda);
    }
    const std::complex<double> ends = coupling_kernel(a, center_x, height, lambda) +
                                      coupling_kernel(b, center_x, height, lambda);
    return (h / 3.0) * (ends + 4.0 * odd + 2.0 * even);
}

}  // namespace

std::complex<double> f_integral_reference(int kp, int i, const SystemConfig& cfg,
                                          const QuadratureSpec& spec) {
    const double lambda = cfg.wavelength();
    const double a = cfg.waveguide_x(kp) - cfg.d / 2.0;
    const double b = cfg.waveguide_x(kp) + cfg.d / 2.0;
    const double center = cfg.waveguide_x(i);

    const double max_step = lambda * spec.max_step_wavelengths;
    size_t panels = static_cast<size_t>(std::ceil((b - a) / (2.0 * max_step)));
    if (panels < 2) panels = 2;

    std::complex<double> prev = simpson(a, b, panels, center, cfg.height, lambda);
    for (int level = 0; level < spec.max_halvings; ++level) {
        panels *= 2;
        const std::complex<double> cur = simpson(a, b, panels, center, cfg.height, lambda);
        if (std::abs(cur - prev) <= spec.rel_tol * std::abs(cur)) return cur;
        prev = cur;
    }
    throw std::runtime_error("quadrature: coupling integral did not converge to rel_tol");
}

std::complex<double> f_stationary_closed(const SystemConfig& cfg) {
    const double lambda = cfg.wavelength();
    const double mag = std::sqrt(lambda / cfg.height);
    const double phase = wave_phase(cfg.height, lambda) - std::numbers::pi / 4.0;
    return mag * unit_phasor(phase);
}

std::complex<double> f_endpoint_closed(int kp, int i, const SystemConfig& cfg) {
    if (kp == i)
        throw std::invalid_argument(
            "endpoint form: invalid when the stationary point lies inside the interval");
    const double lambda = cfg.wavelength();
    const double delta = static_cast<double>(kp - i);
    const double up = delta + 0.5;
    const double lo = delta - 0.5;
    const double r_up = std::sqrt(up * up * cfg.d * cfg.d + cfg.height * cfg.height);
    const double r_lo = std::sqrt(lo * lo * cfg.d * cfg.d + cfg.height * cfg.height);
    const std::complex<double> bracket =
        unit_phasor(wave_phase(r_up, lambda)) / up - unit_phasor(wave_phase(r_lo, lambda)) / lo;
    return std::complex<double>(0.0, 1.0) * (lambda / (2.0 * std::numbers::pi * cfg.d)) * bracket;
}

double avg_interference_reference(int kp, int k, const SystemConfig& cfg,
                                  const QuadratureSpec& spec) {
    std::complex<double> sum = 0.0;
    for (int i = 0; i < cfg.n; ++i)
        sum += f_integral_reference(kp, i, cfg, spec) * std::conj(f_integral_reference(k, i, cfg, spec));
    const double d2 = cfg.d * cfg.d;
    return std::norm(sum) / (d2 * d2);
}

McStats mc_average(const std::function<double(const UserDrop&)>& metric, const SystemConfig& cfg,
                   int n_drops, uint64_t seed, bool worst_case_y) {
    if (n_drops < 1) throw std::invalid_argument("mc_average: need at least one drop");
    std::vector<double> values(static_cast<size_t>(n_drops));
    parallel_for(static_cast<size_t>(n_drops), [&](size_t i) {
        // Per-drop seed depends only on (seed, i), never on scheduling.
        const std::uint64_t drop_seed = make_stream(seed, i).next_u64();
        values[i] = metric(sample_users(cfg, drop_seed, worst_case_y));
    });
    const auto [mean, se] = mean_stderr(values);
    McStats out;
    out.mean = mean;
    out.stderr_ = se;
    out.n_drops = n_drops;
    return out;
}

}  // namespace pinch
