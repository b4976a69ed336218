#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "pinch/config.hpp"

namespace pinch {

/// One table row: the axis coordinates, a metric name, the curve
/// (strategy) it belongs to, the value with its Monte-Carlo standard
/// error (0 for deterministic quantities), and the seed that produced
/// it. Invalid cells (e.g. a singular nulling geometry) carry NaN.
struct SweepCell {
    std::vector<double> axis;
    std::string metric;
    std::string strategy;
    double value = 0.0;
    double stderr_ = 0.0;
    uint64_t seed = 0;
};

struct SweepTable {
    std::string figure;
    std::vector<std::string> axis_names;
    std::vector<SweepCell> cells;
    std::vector<std::string> provenance;  // "key=value" comment lines
};

struct SweepOptions {
    int drops = 100;
    double step_db = 5.0;
};

/// Model-vs-simulation power sweep: Monte-Carlo exact matched-beam SE
/// against the deterministic coupling model and its two bounds, plus a
/// long-run-coupling reference curve, for pt in [-10, 60] dBm.
SweepTable fig_approx_vs_sim(const SystemConfig& cfg, const SweepOptions& opt);

/// SE and energy efficiency of hybrid splits (streams x antennas per
/// stream) of a fixed antenna budget across a power sweep.
SweepTable fig_deployment_tradeoff(const SystemConfig& cfg, const SweepOptions& opt);

/// Exact matched-beam SE and the model bounds as waveguide spacing d
/// sweeps 0.25..8 m at low and high power.
SweepTable fig_spacing(const SystemConfig& cfg, const SweepOptions& opt);

/// Matched vs interference-nulled beams over d in {1,2,4}, with the
/// closed-form cross-check column for the nulled solution.
SweepTable fig_beamformer(const SystemConfig& cfg, const SweepOptions& opt);

/// Single-user placement comparison: in-phase vs equal spacing and
/// nearest-point vs random anchoring, for small and large arrays.
SweepTable fig_placement(const SystemConfig& cfg, const SweepOptions& opt);

/// Hybrid-split grid (streams x antennas per stream) at low and high
/// power; each cell resizes the antenna budget to streams*per_stream.
SweepTable fig_sensitivity(const SystemConfig& cfg, const SweepOptions& opt);

/// Quadrature audit: self-coupling integral vs its stationary-phase
/// closed form and cross-coupling vs the endpoint form over a
/// (spacing, height) grid.
SweepTable oracle_audit(const SystemConfig& cfg);

/// Coupling-factor audit: T, the modelled long-run coupling, and its
/// quadrature reference for neighbouring waveguide pairs over d values.
SweepTable coupling_audit(const SystemConfig& cfg, const std::vector<double>& d_values);

/// CSV with '#' provenance lines, a header row
/// (axes..., metric, strategy, value, stderr, seed), and %.17g values.
void write_csv(const SweepTable& t, std::ostream& os);
void write_csv_file(const SweepTable& t, const std::string& path);

/// gnuplot script that renders the table grouped by (metric, strategy).
std::string plot_script(const SweepTable& t, const std::string& csv_path);

/// Figure-specific sanity checks on a finished table; returns one
/// message per violated check (empty means clean).
std::vector<std::string> post_run_checks(const SweepTable& t);

}  // namespace pinch
