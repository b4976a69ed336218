#include "pinch/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "pinch/accumulate.hpp"
#include "pinch/asymptotics.hpp"
#include "pinch/metrics.hpp"
#include "pinch/oracle.hpp"
#include "pinch/parallel.hpp"
#include "pinch/placement.hpp"
#include "pinch/rng.hpp"
#include "pinch/sampling.hpp"

namespace pinch {

namespace {

constexpr double rf_chain_power_w = 31.6e-3;
constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<double> power_axis_dbm(double lo, double hi, double step) {
    std::vector<double> v;
    for (double p = lo; p <= hi + 1e-9; p += step) v.push_back(p);
    return v;
}

void append_provenance(SweepTable& t, const SystemConfig& cfg, const SweepOptions& opt) {
    t.provenance.push_back("figure=" + t.figure);
    t.provenance.push_back("drops=" + std::to_string(opt.drops));
    t.provenance.push_back("step_db=" + format_g17(opt.step_db));
    t.provenance.push_back("shared_user_y=1");
    std::istringstream snap(config_snapshot(cfg));
    std::string line;
    while (std::getline(snap, line)) {
        if (!line.empty()) t.provenance.push_back(line);
    }
}

void push_cell(SweepTable& t, std::vector<double> axis, const std::string& metric,
               const std::string& strategy, double value, double stderr_, uint64_t seed) {
    SweepCell c;
    c.axis = std::move(axis);
    c.metric = metric;
    c.strategy = strategy;
    c.value = value;
    c.stderr_ = stderr_;
    c.seed = seed;
    t.cells.push_back(std::move(c));
}

// Monte-Carlo cell that tolerates per-drop failures (e.g. a singular
// nulling geometry): any failure marks the whole cell invalid (NaN).
McStats mc_cell(const std::function<double(const UserDrop&)>& metric, const SystemConfig& cfg,
                int drops, uint64_t seed) {
    try {
        return mc_average(metric, cfg, drops, seed, /*worst_case_y=*/true);
    } catch (const std::runtime_error&) {
        McStats bad;
        bad.mean = nan_value;
        bad.stderr_ = nan_value;
        bad.n_drops = drops;
        return bad;
    }
}

// Long-run coupling table from quadrature, indexed [k*n + kp].
std::vector<double> coupling_reference_table(const SystemConfig& cfg) {
    std::vector<double> table(static_cast<size_t>(cfg.n) * cfg.n, 0.0);
    for (int k = 0; k < cfg.n; ++k) {
        for (int kp = 0; kp < cfg.n; ++kp) {
            if (k != kp)
                table[static_cast<size_t>(k) * cfg.n + kp] = avg_interference_reference(k, kp, cfg);
        }
    }
    return table;
}

// Deterministic multi-user SE with the interference term replaced by a
// precomputed long-run coupling table.
double se_with_coupling_table(const UserDrop& drop, const SystemConfig& cfg,
                              const std::vector<double>& coupling) {
    const int n = drop.size();
    std::vector<double> a(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) a[static_cast<size_t>(k)] = channel_strength(drop, k, cfg);
    const double p_stream = cfg.pt_w / n;
    double total = 0.0;
    for (int k = 0; k < n; ++k) {
        double interf = 0.0;
        for (int kp = 0; kp < n; ++kp) {
            if (kp != k)
                interf += p_stream * coupling[static_cast<size_t>(k) * n + kp] /
                          a[static_cast<size_t>(kp)];
        }
        const double noise = cfg.noise_w / cfg.channel_gain();
        total += std::log1p(p_stream * a[static_cast<size_t>(k)] / (interf + noise)) /
                 std::numbers::ln2;
    }
    return total;
}

}  // namespace

SweepTable fig_approx_vs_sim(const SystemConfig& base, const SweepOptions& opt) {
    SystemConfig cfg = base;
    cfg.d = 1.0;  // scenario fixes a small spacing so the coupling matters
    cfg.validate();

    SweepTable t;
    t.figure = "approx_vs_sim";
    t.axis_names = {"pt_dbm"};
    append_provenance(t, cfg, opt);

    const std::vector<double> coupling = coupling_reference_table(cfg);
    const std::vector<double> powers = power_axis_dbm(-10.0, 60.0, opt.step_db);

    for (const double pt_dbm : powers) {
        SystemConfig c = cfg;
        c.pt_w = dbm_to_watt(pt_dbm);

        const McStats sim = mc_cell(
            [&c](const UserDrop& drop) {
                return se_distributed_mrt(drop, distributed_nearest(drop, c), c).total_se;
            },
            c, opt.drops, c.seed);
        push_cell(t, {pt_dbm}, "se", "simulation", sim.mean, sim.stderr_, c.seed);

        const McStats model = mc_cell(
            [&c](const UserDrop& drop) { return se_distributed_approx(drop, c); }, c, opt.drops,
            c.seed);
        push_cell(t, {pt_dbm}, "se", "model", model.mean, model.stderr_, c.seed);

        const McStats upper = mc_cell(
            [&c](const UserDrop& drop) { return se_upper_bound(drop, c); }, c, opt.drops, c.seed);
        push_cell(t, {pt_dbm}, "se", "upper_bound", upper.mean, upper.stderr_, c.seed);

        const McStats lower = mc_cell(
            [&c](const UserDrop& drop) { return se_lower_bound(drop, c); }, c, opt.drops, c.seed);
        push_cell(t, {pt_dbm}, "se", "lower_bound", lower.mean, lower.stderr_, c.seed);

        const McStats quad = mc_cell(
            [&c, &coupling](const UserDrop& drop) {
                return se_with_coupling_table(drop, c, coupling);
            },
            c, opt.drops, c.seed);
        push_cell(t, {pt_dbm}, "se", "model_quadrature", quad.mean, quad.stderr_, c.seed);
    }
    return t;
}

SweepTable fig_deployment_tradeoff(const SystemConfig& base, const SweepOptions& opt) {
    SystemConfig cfg = base;
    cfg.n = 15;  // scenario uses a budget with several exact splits
    cfg.validate();

    SweepTable t;
    t.figure = "deployment_tradeoff";
    t.axis_names = {"pt_dbm", "i_users", "q_pas"};
    append_provenance(t, cfg, opt);

    std::vector<std::pair<int, int>> splits;
    for (int i = 1; i <= cfg.n; ++i) {
        if (cfg.n % i == 0) splits.emplace_back(i, cfg.n / i);
    }

    const std::vector<double> powers = power_axis_dbm(-10.0, 60.0, opt.step_db);
    for (const auto& [i_users, q_pas] : splits) {
        SystemConfig sample_cfg = cfg;
        sample_cfg.n = i_users;  // one user per active waveguide
        for (const double pt_dbm : powers) {
            SystemConfig c = cfg;
            c.pt_w = dbm_to_watt(pt_dbm);
            SystemConfig sc = sample_cfg;
            sc.pt_w = c.pt_w;

            const McStats se = mc_cell(
                [&c, i_users, q_pas](const UserDrop& drop) {
                    return se_general(drop, c, i_users, q_pas);
                },
                sc, opt.drops, c.seed);
            const std::vector<double> axis = {pt_dbm, static_cast<double>(i_users),
                                              static_cast<double>(q_pas)};
            push_cell(t, axis, "se", "general_model", se.mean, se.stderr_, c.seed);

            const double ee =
                energy_efficiency(se.mean, i_users, rf_chain_power_w, c.pt_w);
            const double ee_err =
                energy_efficiency(se.stderr_, i_users, rf_chain_power_w, c.pt_w);
            push_cell(t, axis, "ee", "general_model", ee, ee_err, c.seed);
        }
    }
    return t;
}

SweepTable fig_spacing(const SystemConfig& base, const SweepOptions& opt) {
    SystemConfig cfg = base;
    cfg.validate();

    SweepTable t;
    t.figure = "spacing";
    t.axis_names = {"d", "pt_dbm"};
    append_provenance(t, cfg, opt);

    for (double d = 0.25; d <= 8.0 + 1e-9; d += 0.25) {
        for (const double pt_dbm : {0.0, 40.0}) {
            SystemConfig c = cfg;
            c.d = d;
            c.pt_w = dbm_to_watt(pt_dbm);

            const McStats sim = mc_cell(
                [&c](const UserDrop& drop) {
                    return se_distributed_mrt(drop, distributed_nearest(drop, c), c).total_se;
                },
                c, opt.drops, c.seed);
            push_cell(t, {d, pt_dbm}, "se", "simulation", sim.mean, sim.stderr_, c.seed);

            const McStats model = mc_cell(
                [&c](const UserDrop& drop) { return se_distributed_approx(drop, c); }, c,
                opt.drops, c.seed);
            push_cell(t, {d, pt_dbm}, "se", "model", model.mean, model.stderr_, c.seed);

            const McStats upper = mc_cell(
                [&c](const UserDrop& drop) { return se_upper_bound(drop, c); }, c, opt.drops,
                c.seed);
            push_cell(t, {d, pt_dbm}, "se", "upper_bound", upper.mean, upper.stderr_, c.seed);

            const McStats lower = mc_cell(
                [&c](const UserDrop& drop) { return se_lower_bound(drop, c); }, c, opt.drops,
                c.seed);
            push_cell(t, {d, pt_dbm}, "se", "lower_bound", lower.mean, lower.stderr_, c.seed);
        }
    }
    return t;
}

SweepTable fig_beamformer(const SystemConfig& base, const SweepOptions& opt) {
    SystemConfig cfg = base;
    cfg.validate();

    SweepTable t;
    t.figure = "beamformer";
    t.axis_names = {"d", "pt_dbm"};
    append_provenance(t, cfg, opt);

    const std::vector<double> powers = power_axis_dbm(-10.0, 60.0, opt.step_db);
    for (const double d : {1.0, 2.0, 4.0}) {
        for (const double pt_dbm : powers) {
            SystemConfig c = cfg;
            c.d = d;
            c.pt_w = dbm_to_watt(pt_dbm);

            const McStats mrt = mc_cell(
                [&c](const UserDrop& drop) {
                    return se_distributed_mrt(drop, distributed_nearest(drop, c), c).total_se;
                },
                c, opt.drops, c.seed);
            push_cell(t, {d, pt_dbm}, "se", "mrt", mrt.mean, mrt.stderr_, c.seed);

            const McStats zf = mc_cell(
                [&c](const UserDrop& drop) {
                    return se_distributed_zf(drop, distributed_nearest(drop, c), c).total_se;
                },
                c, opt.drops, c.seed);
            push_cell(t, {d, pt_dbm}, "se", "zf", zf.mean, zf.stderr_, c.seed);

            const McStats zfc = mc_cell(
                [&c](const UserDrop& drop) {
                    const ChannelMatrix m =
                        distributed_channel_matrix(drop, distributed_nearest(drop, c), c);
                    return se_zf_closed(zf_beamformer(m).zf_alpha, c);
                },
                c, opt.drops, c.seed);
            push_cell(t, {d, pt_dbm}, "se", "zf_closed", zfc.mean, zfc.stderr_, c.seed);
        }
    }
    return t;
}

SweepTable fig_placement(const SystemConfig& base, const SweepOptions& opt) {
    SystemConfig cfg = base;
    cfg.validate();

    SweepTable t;
    t.figure = "placement";
    t.axis_names = {"n", "pt_dbm"};
    append_provenance(t, cfg, opt);

    const std::vector<double> powers = power_axis_dbm(-10.0, 60.0, opt.step_db);
    for (const int n : {5, 15}) {
        SystemConfig cn = cfg;
        cn.n = n;
        for (const double pt_dbm : powers) {
            SystemConfig c = cn;
            c.pt_w = dbm_to_watt(pt_dbm);
            const std::vector<double> axis = {static_cast<double>(n), pt_dbm};

            const McStats inphase = mc_cell(
                [&c, n](const UserDrop& drop) { return se_centralized_exact(drop, c, n); }, c,
                opt.drops, c.seed);
            push_cell(t, axis, "se", "inphase", inphase.mean, inphase.stderr_, c.seed);

            const McStats eq = mc_cell(
                [&c, n](const UserDrop& drop) { return se_equal_spacing(drop, c, n); }, c,
                opt.drops, c.seed);
            push_cell(t, axis, "se", "equal_spacing", eq.mean, eq.stderr_, c.seed);

            const McStats eql = mc_cell(
                [&c, n](const UserDrop& drop) { return se_equal_spacing_literal(drop, c, n); }, c,
                opt.drops, c.seed);
            push_cell(t, axis, "se", "equal_spacing_literal", eql.mean, eql.stderr_, c.seed);

            const McStats nearest = mc_cell(
                [&c](const UserDrop& drop) {
                    return se_distributed_mrt(drop, distributed_nearest(drop, c), c).total_se;
                },
                c, opt.drops, c.seed);
            push_cell(t, axis, "se", "nearest_mrt", nearest.mean, nearest.stderr_, c.seed);

            // Random-anchor baseline: the placement needs its own per-drop
            // randomness, so this cell runs its own indexed loop instead of
            // mc_cell (results stay independent of the worker count).
            std::vector<double> vals(static_cast<size_t>(opt.drops));
            parallel_for(static_cast<size_t>(opt.drops), [&](size_t idx) {
                const std::uint64_t drop_seed = make_stream(c.seed, idx).next_u64();
                const UserDrop drop = sample_users(c, drop_seed, /*worst_case_y=*/true);
                const std::uint64_t place_seed =
                    make_stream(c.seed ^ 0xa17e7a6ce5eedull, idx).next_u64();
                const PaPlacement p = random_reference(drop, place_seed, c);
                vals[idx] = se_distributed_mrt(drop, p, c).total_se;
            });
            const auto [rand_mean, rand_err] = mean_stderr(vals);
            push_cell(t, axis, "se", "random_mrt", rand_mean, rand_err, c.seed);
        }
    }
    return t;
}

SweepTable fig_sensitivity(const SystemConfig& base, const SweepOptions& opt) {
    SystemConfig cfg = base;
    cfg.validate();

    SweepTable t;
    t.figure = "sensitivity";
    t.axis_names = {"i_users", "q_pas", "pt_dbm"};
    append_provenance(t, cfg, opt);

    for (const int i_users : {1, 3, 5, 15}) {
        for (const int q_pas : {1, 3, 5, 15}) {
            for (const double pt_dbm : {0.0, 40.0}) {
                SystemConfig c = cfg;
                c.n = i_users * q_pas;  // budget follows the split under test
                c.pt_w = dbm_to_watt(pt_dbm);
                SystemConfig sc = c;
                sc.n = i_users;

                const McStats se = mc_cell(
                    [&c, i_users, q_pas](const UserDrop& drop) {
                        return se_general(drop, c, i_users, q_pas);
                    },
                    sc, opt.drops, c.seed);
                push_cell(t,
                          {static_cast<double>(i_users), static_cast<double>(q_pas), pt_dbm},
                          "se", "general_model", se.mean, se.stderr_, c.seed);
            }
        }
    }
    return t;
}

SweepTable oracle_audit(const SystemConfig& base) {
    SweepTable t;
    t.figure = "oracle_audit";
    t.axis_names = {"d", "height"};
    t.provenance.push_back("figure=oracle_audit");
    t.provenance.push_back("fc_hz=" + format_g17(base.fc_hz));

    for (const double d : {1.0, 2.0, 4.0}) {
        for (const double height : {3.0, 5.0, 10.0}) {
            SystemConfig c = base;
            c.d = d;
            c.height = height;
            c.validate();

            const std::complex<double> quad = f_integral_reference(2, 2, c);
            const std::complex<double> closed = f_stationary_closed(c);
            push_cell(t, {d, height}, "f_self_mag", "quadrature", std::abs(quad), 0.0, 0);
            push_cell(t, {d, height}, "f_self_mag", "closed_form", std::abs(closed), 0.0, 0);
            push_cell(t, {d, height}, "f_self_phase_err_rad", "closed_form",
                      std::abs(std::arg(quad / closed)), 0.0, 0);

            const std::complex<double> quad_adj = f_integral_reference(2, 1, c);
            const std::complex<double> closed_adj = f_endpoint_closed(2, 1, c);
            push_cell(t, {d, height}, "f_adjacent_mag", "quadrature", std::abs(quad_adj), 0.0, 0);
            push_cell(t, {d, height}, "f_adjacent_mag", "closed_form", std::abs(closed_adj), 0.0,
                      0);
            push_cell(t, {d, height}, "f_adjacent_phase_err_rad", "closed_form",
                      std::abs(std::arg(quad_adj / closed_adj)), 0.0, 0);
        }
    }
    return t;
}

SweepTable coupling_audit(const SystemConfig& base, const std::vector<double>& d_values) {
    SweepTable t;
    t.figure = "coupling_audit";
    t.axis_names = {"d", "delta"};
    t.provenance.push_back("figure=coupling_audit");
    t.provenance.push_back("n=" + std::to_string(base.n));
    t.provenance.push_back("height=" + format_g17(base.height));

    for (const double d : d_values) {
        SystemConfig c = base;
        c.d = d;
        c.validate();
        for (int delta = 1; delta < c.n; ++delta) {
            const double tf = t_factor(delta, 0, c);
            push_cell(t, {d, static_cast<double>(delta)}, "t_factor", "model", tf, 0.0, 0);
            push_cell(t, {d, static_cast<double>(delta)}, "coupling", "model",
                      avg_interference_approx(delta, 0, c), 0.0, 0);
            push_cell(t, {d, static_cast<double>(delta)}, "coupling", "quadrature",
                      avg_interference_reference(delta, 0, c), 0.0, 0);
        }
    }
    return t;
}

void write_csv(const SweepTable& t, std::ostream& os) {
    for (const auto& line : t.provenance) os << "# " << line << '\n';
    for (const auto& name : t.axis_names) os << name << ',';
    os << "metric,strategy,value,stderr,seed\n";
    for (const auto& c : t.cells) {
        for (const double a : c.axis) os << format_g17(a) << ',';
        os << c.metric << ',' << c.strategy << ',' << format_g17(c.value) << ','
           << format_g17(c.stderr_) << ',' << c.seed << '\n';
    }
}

void write_csv_file(const SweepTable& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("csv: cannot open " + path + " for writing");
    write_csv(t, out);
    if (!out.good()) throw std::runtime_error("csv: write to " + path + " failed");
}

std::string plot_script(const SweepTable& t, const std::string& csv_path) {
    const size_t n_ax = t.axis_names.size();
    const size_t metric_col = n_ax + 1;
    const size_t strategy_col = n_ax + 2;
    const size_t value_col = n_ax + 3;

    std::vector<std::pair<std::string, std::string>> series;
    for (const auto& c : t.cells) {
        const auto key = std::make_pair(c.metric, c.strategy);
        bool seen = false;
        for (const auto& s : series) {
            if (s == key) {
                seen = true;
                break;
            }
        }
        if (!seen) series.push_back(key);
    }

    std::ostringstream os;
    os << "set datafile separator ','\n"
       << "set datafile missing 'nan'\n"
       << "set key outside\n"
       << "set xlabel '" << (n_ax ? t.axis_names[0] : std::string("x")) << "'\n"
       << "set ylabel 'value'\n"
       << "set term pngcairo size 1200,800\n"
       << "set output '" << t.figure << ".png'\n"
       << "plot \\\n";
    for (size_t s = 0; s < series.size(); ++s) {
        os << "  '" << csv_path << "' using (strcol(" << metric_col << ") eq '"
           << series[s].first << "' && strcol(" << strategy_col << ") eq '" << series[s].second
           << "' ? $1 : NaN):" << value_col << " with linespoints title '" << series[s].first
           << " " << series[s].second << "'";
        os << (s + 1 < series.size() ? ", \\\n" : "\n");
    }
    return os.str();
}

std::vector<std::string> post_run_checks(const SweepTable& t) {
    std::vector<std::string> problems;
    const auto value_of = [&](const std::vector<double>& axis, const std::string& metric,
                              const std::string& strategy) {
        for (const auto& c : t.cells) {
            if (c.axis == axis && c.metric == metric && c.strategy == strategy) return c.value;
        }
        return nan_value;
    };

    if (t.figure == "approx_vs_sim") {
        std::vector<double> powers;
        for (const auto& c : t.cells) {
            if (powers.empty() || powers.back() != c.axis[0]) {
                if (std::find(powers.begin(), powers.end(), c.axis[0]) == powers.end())
                    powers.push_back(c.axis[0]);
            }
        }
        for (size_t i = 1; i < powers.size(); ++i) {
            const double prev = value_of({powers[i - 1]}, "se", "upper_bound");
            const double cur = value_of({powers[i]}, "se", "upper_bound");
            if (!(cur > prev))
                problems.push_back("upper bound not strictly increasing at pt=" +
                                   format_g17(powers[i]));
        }
        if (powers.size() >= 3) {
            const double first_step = value_of({powers[1]}, "se", "lower_bound") -
                                      value_of({powers[0]}, "se", "lower_bound");
            const double last_step =
                value_of({powers[powers.size() - 1]}, "se", "lower_bound") -
                value_of({powers[powers.size() - 2]}, "se", "lower_bound");
            if (!(last_step < 0.1 && last_step < 0.05 * first_step))
                problems.push_back("lower bound does not saturate at high power");
        }
        double prev_gap = -std::numeric_limits<double>::infinity();
        for (const double p : powers) {
            if (p <= 30.0 + 1e-9) continue;
            const double gap =
                value_of({p}, "se", "model") - value_of({p}, "se", "simulation");
            if (gap < prev_gap - 1e-9)
                problems.push_back("model/simulation gap shrinks at pt=" + format_g17(p));
            prev_gap = gap;
        }
        for (const double p : powers) {
            if (p > 30.0 + 1e-9) continue;
            const double model = value_of({p}, "se", "model");
            const double quad = value_of({p}, "se", "model_quadrature");
            if (!(std::abs(model - quad) <= 0.05 * std::abs(quad)))
                problems.push_back("model deviates >5% from its quadrature reference at pt=" +
                                   format_g17(p));
        }
    } else if (t.figure == "spacing") {
        for (const auto& c : t.cells) {
            if (c.metric != "se" || c.strategy != "model") continue;
            const double up = value_of(c.axis, "se", "upper_bound");
            const double lo = value_of(c.axis, "se", "lower_bound");
            if (!(lo <= c.value + 1e-9 && c.value <= up + 1e-9))
                problems.push_back("model escapes its bounds at d=" + format_g17(c.axis[0]) +
                                   ", pt=" + format_g17(c.axis[1]));
        }
    } else if (t.figure == "beamformer") {
        for (const auto& c : t.cells) {
            if (c.metric != "se" || c.strategy != "zf") continue;
            const double closed = value_of(c.axis, "se", "zf_closed");
            if (std::isnan(c.value) != std::isnan(closed)) {
                problems.push_back("zf validity mismatch at d=" + format_g17(c.axis[0]));
                continue;
            }
            if (!std::isnan(c.value) && !(std::abs(c.value - closed) <= 1e-6 * std::abs(closed)))
                problems.push_back("zf disagrees with its closed form at d=" +
                                   format_g17(c.axis[0]) + ", pt=" + format_g17(c.axis[1]));
        }
    } else if (t.figure == "placement") {
        for (const auto& c : t.cells) {
            if (c.metric != "se" || c.strategy != "inphase") continue;
            const double eq = value_of(c.axis, "se", "equal_spacing");
            if (!(c.value >= eq - 1e-9))
                problems.push_back("in-phase mean below equal-spacing mean at n=" +
                                   format_g17(c.axis[0]) + ", pt=" + format_g17(c.axis[1]));
        }
    } else {
        for (const auto& c : t.cells) {
            if (std::isnan(c.value))
                problems.push_back("invalid cell in " + t.figure + " (" + c.metric + "/" +
                                   c.strategy + ")");
        }
    }
    return problems;
}

}  // namespace pinch
