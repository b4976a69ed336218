#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "pinch/config.hpp"
#include "pinch/geometry.hpp"

namespace pinch {

/// Adaptive composite-Simpson settings for the coupling integrals.
/// Panels never exceed max_step_fraction of a wavelength; refinement
/// halves the step until successive results agree to rel_tol.
struct QuadratureSpec {
    double max_step_wavelengths = 1.0 / 32.0;
    double rel_tol = 1e-6;
    int max_halvings = 12;
};

/// Coupling integral between the x-interval of user kp and the antenna
/// on waveguide i (both 0-based), with r(x) = sqrt((x - i*d)^2 + D^2):
/// integral over x in [kp*d - d/2, kp*d + d/2] of
///     exp(-j*2*pi/lambda * r(x)) / r(x) dx,
/// evaluated by adaptive Simpson quadrature.
std::complex<double> f_integral_reference(int kp, int i, const SystemConfig& cfg,
                                          const QuadratureSpec& spec = {});

/// Stationary-phase closed form of the same integral, valid when the
/// stationary point x = i*d lies inside the interval (kp == i):
/// sqrt(lambda/D) * exp(-j*(2*pi*D/lambda + pi/4)).
std::complex<double> f_stationary_closed(const SystemConfig& cfg);

/// Endpoint (integration-by-parts) closed form for kp != i, with
/// delta = kp - i:
///   (j*lambda/(2*pi*d)) * [ exp(-j*2*pi/lambda*sqrt((delta+1/2)^2 d^2 + D^2))/(delta+1/2)
///                         - exp(-j*2*pi/lambda*sqrt((delta-1/2)^2 d^2 + D^2))/(delta-1/2) ].
std::complex<double> f_endpoint_closed(int kp, int i, const SystemConfig& cfg);

/// Quadrature-backed long-run coupling power between waveguides kp and k:
/// |sum_i f(kp,i) * conj(f(k,i))|^2 / d^4, summing i over all waveguides.
double avg_interference_reference(int kp, int k, const SystemConfig& cfg,
                                  const QuadratureSpec& spec = {});

/// One Monte-Carlo summary: mean over drops with its standard error.
struct McStats {
    double mean = 0.0;
    double stderr_ = 0.0;
    int n_drops = 0;
};

/// Average metric(drop) over n_drops independent user drops. Drop i uses
/// the decorrelated substream make_stream(seed, i), so the estimate is
/// reproducible for any worker count. worst_case_y pins all users to one
/// shared y per drop.
McStats mc_average(const std::function<double(const UserDrop&)>& metric, const SystemConfig& cfg,
                   int n_drops, uint64_t seed, bool worst_case_y);

}  // namespace pinch
