#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pinch/config.hpp"
#include "pinch/metrics.hpp"
#include "pinch/oracle.hpp"
#include "pinch/placement.hpp"
#include "pinch/sampling.hpp"
#include "pinch/sweep.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_precondition = 2;
constexpr int exit_postcheck = 3;

struct GlobalArgs {
    std::string config_path;
    std::uint64_t seed = 0;
    int n = 0;
    double d = 0.0, height = 0.0, length = 0.0, fc_hz = 0.0, n_eff = 0.0;
    double noise_dbm = 0.0, pt_dbm = 0.0;
};

// Precedence: built-in defaults < config file < explicit flags.
pinch::SystemConfig resolve_config(const CLI::App& app, const GlobalArgs& a) {
    pinch::SystemConfig cfg;
    if (!a.config_path.empty()) cfg = pinch::load_config_file(a.config_path);
    if (app.count("--seed")) cfg.seed = a.seed;
    if (app.count("--n")) cfg.n = a.n;
    if (app.count("--d")) cfg.d = a.d;
    if (app.count("--height")) cfg.height = a.height;
    if (app.count("--length")) cfg.length = a.length;
    if (app.count("--fc-hz")) cfg.fc_hz = a.fc_hz;
    if (app.count("--n-eff")) cfg.n_eff = a.n_eff;
    if (app.count("--noise-dbm")) cfg.noise_w = pinch::dbm_to_watt(a.noise_dbm);
    if (app.count("--pt-dbm")) cfg.pt_w = pinch::dbm_to_watt(a.pt_dbm);
    cfg.validate();
    return cfg;
}

void emit_table(const pinch::SweepTable& table, const std::string& out_path,
                const std::string& plot_path) {
    if (out_path.empty() || out_path == "-") {
        pinch::write_csv(table, std::cout);
    } else {
        pinch::write_csv_file(table, out_path);
    }
    if (!plot_path.empty()) {
        std::ofstream ps(plot_path);
        if (!ps) throw std::runtime_error("cannot open " + plot_path + " for writing");
        ps << pinch::plot_script(table, out_path.empty() ? "-" : out_path);
    }
}

int finish_table(const pinch::SweepTable& table, const std::string& out_path,
                 const std::string& plot_path) {
    emit_table(table, out_path, plot_path);
    const std::vector<std::string> problems = pinch::post_run_checks(table);
    for (const auto& p : problems) std::cerr << "post-run check failed: " << p << '\n';
    return problems.empty() ? exit_ok : exit_postcheck;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pinching-antenna multi-user downlink simulator"};
    app.require_subcommand(1);

    GlobalArgs ga;
    app.add_option("--config", ga.config_path, "key=value config file");
    app.add_option("--seed", ga.seed, "master RNG seed");
    app.add_option("--n", ga.n, "waveguides / users / antenna budget");
    app.add_option("--d", ga.d, "waveguide spacing [m]");
    app.add_option("--height", ga.height, "waveguide height above users [m]");
    app.add_option("--length", ga.length, "waveguide length [m]");
    app.add_option("--fc-hz", ga.fc_hz, "carrier frequency [Hz]");
    app.add_option("--n-eff", ga.n_eff, "effective refractive index");
    app.add_option("--noise-dbm", ga.noise_dbm, "noise power [dBm]");
    app.add_option("--pt-dbm", ga.pt_dbm, "transmit power [dBm]");

    std::string out_path;
    std::string plot_path;
    app.add_option("--out", out_path, "output path ('-' = stdout)");
    app.add_option("--plot-script", plot_path, "write a gnuplot script here");

    // --- se: one-shot Monte-Carlo evaluation ---------------------------
    auto* se_cmd = app.add_subcommand("se", "average spectral efficiency for one setup");
    se_cmd->fallthrough();  // accept the global options after the subcommand too
    std::string strategy = "distributed";
    std::string beamformer = "mrt";
    int drops = 100;
    int i_users = 0;
    int q_pas = 0;
    int n_pas = 0;
    double p_rf_mw = 31.6;
    se_cmd->add_option("--strategy", strategy, "centralized | distributed | general")
        ->check(CLI::IsMember({"centralized", "distributed", "general"}));
    se_cmd->add_option("--beamformer", beamformer, "mrt | zf (distributed only)")
        ->check(CLI::IsMember({"mrt", "zf"}));
    se_cmd->add_option("--drops", drops, "Monte-Carlo drops")->check(CLI::PositiveNumber);
    se_cmd->add_option("--i-users", i_users, "simultaneous streams (general)");
    se_cmd->add_option("--q-pas", q_pas, "antennas per stream (general)");
    se_cmd->add_option("--n-pas", n_pas, "array size (centralized; default n)");
    se_cmd->add_option("--p-rf-mw", p_rf_mw, "per-chain RF power [mW]");

    // --- sweep: figure tables ------------------------------------------
    auto* sweep_cmd = app.add_subcommand("sweep", "generate a figure data table");
    sweep_cmd->fallthrough();
    std::string figure;
    double step_db = 5.0;
    int sweep_drops = 100;
    sweep_cmd->add_option("--figure", figure, "which table to generate")
        ->required()
        ->check(CLI::IsMember({"approx_vs_sim", "deployment_tradeoff", "spacing", "beamformer",
                               "placement", "sensitivity"}));
    sweep_cmd->add_option("--step", step_db, "power axis step [dB]")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--drops", sweep_drops, "Monte-Carlo drops per cell")
        ->check(CLI::PositiveNumber);

    // --- oracle: quadrature self-audit ---------------------------------
    auto* oracle_cmd = app.add_subcommand("oracle", "quadrature vs closed-form audit table");
    oracle_cmd->fallthrough();

    // --- coupling: coupling-factor audit --------------------------------
    auto* coupling_cmd =
        app.add_subcommand("coupling", "coupling factor and long-run coupling table");
    coupling_cmd->fallthrough();
    std::vector<double> coupling_d = {1.0, 2.0, 4.0};
    coupling_cmd->add_option("--d-values", coupling_d, "spacings to tabulate");

    CLI11_PARSE(app, argc, argv);

    try {
        const pinch::SystemConfig cfg = resolve_config(app, ga);

        if (se_cmd->parsed()) {
            if (n_pas == 0) n_pas = cfg.n;
            pinch::McStats stats;
            int n_rf = 0;
            if (strategy == "centralized") {
                stats = pinch::mc_average(
                    [&](const pinch::UserDrop& drop) {
                        return pinch::se_centralized_exact(drop, cfg, n_pas);
                    },
                    cfg, drops, cfg.seed, /*worst_case_y=*/true);
                n_rf = 1;
            } else if (strategy == "distributed") {
                const bool zf = beamformer == "zf";
                stats = pinch::mc_average(
                    [&](const pinch::UserDrop& drop) {
                        const pinch::PaPlacement p = pinch::distributed_nearest(drop, cfg);
                        return zf ? pinch::se_distributed_zf(drop, p, cfg).total_se
                                  : pinch::se_distributed_mrt(drop, p, cfg).total_se;
                    },
                    cfg, drops, cfg.seed, /*worst_case_y=*/true);
                n_rf = cfg.n;
            } else {
                if (i_users < 1 || q_pas < 1)
                    throw std::invalid_argument("general strategy needs --i-users and --q-pas");
                pinch::SystemConfig sample_cfg = cfg;
                sample_cfg.n = i_users;
                stats = pinch::mc_average(
                    [&](const pinch::UserDrop& drop) {
                        return pinch::se_general(drop, cfg, i_users, q_pas);
                    },
                    sample_cfg, drops, cfg.seed, /*worst_case_y=*/true);
                n_rf = i_users;
            }
            const double ee =
                pinch::energy_efficiency(stats.mean, n_rf, p_rf_mw * 1e-3, cfg.pt_w);
            std::ostream* os = &std::cout;
            std::ofstream file;
            if (!out_path.empty() && out_path != "-") {
                file.open(out_path);
                if (!file) throw std::runtime_error("cannot open " + out_path + " for writing");
                os = &file;
            }
            char buf[256];
            std::snprintf(buf, sizeof(buf),
                          "strategy=%s\nse_mean=%.17g\nse_stderr=%.17g\nee=%.17g\ndrops=%d\n",
                          strategy.c_str(), stats.mean, stats.stderr_, ee, stats.n_drops);
            *os << buf << pinch::config_snapshot(cfg);
            return exit_ok;
        }

        if (sweep_cmd->parsed()) {
            pinch::SweepOptions opt;
            opt.drops = sweep_drops;
            opt.step_db = step_db;
            pinch::SweepTable table;
            if (figure == "approx_vs_sim")
                table = pinch::fig_approx_vs_sim(cfg, opt);
            else if (figure == "deployment_tradeoff")
                table = pinch::fig_deployment_tradeoff(cfg, opt);
            else if (figure == "spacing")
                table = pinch::fig_spacing(cfg, opt);
            else if (figure == "beamformer")
                table = pinch::fig_beamformer(cfg, opt);
            else if (figure == "placement")
                table = pinch::fig_placement(cfg, opt);
            else
                table = pinch::fig_sensitivity(cfg, opt);
            const std::string path = out_path.empty() ? figure + ".csv" : out_path;
            return finish_table(table, path, plot_path);
        }

        if (oracle_cmd->parsed()) {
            const pinch::SweepTable table = pinch::oracle_audit(cfg);
            const std::string path = out_path.empty() ? "oracle_audit.csv" : out_path;
            return finish_table(table, path, plot_path);
        }

        if (coupling_cmd->parsed()) {
            const pinch::SweepTable table = pinch::coupling_audit(cfg, coupling_d);
            const std::string path = out_path.empty() ? "coupling_audit.csv" : out_path;
            return finish_table(table, path, plot_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_precondition;
    }
    return exit_ok;
}
