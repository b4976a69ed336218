#pragma once

#include <vector>

#include "pinch/config.hpp"
#include "pinch/geometry.hpp"

namespace pinch {

/// Oscillatory factor of the averaged cross-waveguide coupling between
/// waveguides k and kp (integer indices, k != kp). Stationary-phase
/// reduction of the feed-to-user propagation integral.
double t_factor(int k, int kp, const SystemConfig& cfg);

/// Long-run cross-coupling power between waveguides k and kp:
/// (lambda^3 / (pi^2 d^6 D)) * T^2.
double avg_interference_approx(int k, int kp, const SystemConfig& cfg);

/// Aggregate channel strength A_k = sum_i 1/dist(k,i)^2 with the
/// antenna on waveguide i pinned at user i's y (nearest-point layout);
/// reduces to the planar distance sqrt((x_k - x_i)^2 + D^2) when all
/// users share one y.
double channel_strength(const UserDrop& drop, int k, const SystemConfig& cfg);

/// Deterministic multi-user SE model built from t_factor couplings and
/// worst-case planar distances; no antenna phases enter.
double se_distributed_approx(const UserDrop& drop, const SystemConfig& cfg);

/// Coupling-free ceiling of the model (all T^2 -> 0).
double se_upper_bound(const UserDrop& drop, const SystemConfig& cfg);

/// Full-coupling floor of the model (all T^2 -> 16).
double se_lower_bound(const UserDrop& drop, const SystemConfig& cfg);

/// SE of the model at transmit power pt_w (overriding cfg.pt_w).
double se_distributed_approx_at(const UserDrop& drop, const SystemConfig& cfg, double pt_w);
double se_upper_bound_at(const UserDrop& drop, const SystemConfig& cfg, double pt_w);
double se_lower_bound_at(const UserDrop& drop, const SystemConfig& cfg, double pt_w);

}  // namespace pinch
