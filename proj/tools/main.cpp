#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relcode/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"relcode: maximum-entropy duration codes under relative motion"};
    app.require_subcommand(1);

    // solve
    std::string solve_config;
    auto* solve = app.add_subcommand("solve", "Print model scalars for a config file");
    solve->add_option("config", solve_config, "JSON model config")->required();

    // sweep
    relcode::cli::SweepOptions sweep_options;
    std::string sweep_config;
    std::size_t sweep_n = 0;
    auto* sweep = app.add_subcommand("sweep", "Write a velocity-sweep CSV");
    sweep->add_option("--quantity", sweep_options.quantity, "kld|fisher|free-energy|all");
    sweep->add_option("config", sweep_config, "JSON model config (explicit-codebook mode)");
    sweep->add_option("--n", sweep_n, "codebook size (figure mode)");
    sweep->add_option("--beta-tau", sweep_options.beta_tau, "beta * mean duration");
    sweep->add_option("--v-min", sweep_options.v_min, "grid start");
    sweep->add_option("--v-max", sweep_options.v_max, "grid end (inclusive)");
    sweep->add_option("--steps", sweep_options.steps, "number of rows");
    sweep->add_option("--c", sweep_options.c, "light speed");
    sweep->add_option("--power", sweep_options.power, "transmit power");
    sweep->add_option("--output", sweep_options.output, "CSV path")->required();
    sweep->add_flag("--emit-plot-script", sweep_options.emit_plot_script,
                    "also write a gnuplot script next to the CSV");

    // vcrit
    relcode::cli::VcritOptions vcrit_options;
    std::string vcrit_config;
    auto* vcrit = app.add_subcommand("vcrit", "Critical decoding velocities");
    vcrit->add_option("--n", vcrit_options.n_list, "codebook sizes (paper variant)");
    vcrit->add_option("config", vcrit_config, "JSON model config (consistent variant)");
    vcrit->add_option("--beta-tau", vcrit_options.beta_tau, "beta * mean duration");
    vcrit->add_option("--c", vcrit_options.c, "light speed");
    vcrit->add_option("--variant", vcrit_options.variant, "paper|consistent");

    // simulate
    relcode::cli::SimulateOptions sim_options;
    double sim_v0 = -1.0;
    double sim_sigma = -1.0;
    auto* simulate = app.add_subcommand("simulate", "Seeded Monte Carlo run");
    simulate->add_option("config", sim_options.config_path, "JSON model config")->required();
    simulate->add_option("--v", sim_options.v, "true sender speed");
    simulate->add_option("--v0", sim_v0, "assumed sender speed (overrides config)");
    simulate->add_option("--n", sim_options.num_symbols, "symbols per sequence");
    simulate->add_option("--trials", sim_options.trials, "independent trials");
    simulate->add_option("--sigma", sim_sigma, "relative jitter (overrides config)");
    simulate->add_option("--seed", sim_options.seed, "RNG seed");
    simulate->add_option("--output", sim_options.output, "report path")->required();

    // audit
    relcode::cli::AuditOptions audit_options;
    std::string audit_config;
    auto* audit = app.add_subcommand("audit", "Print the discrepancy report");
    audit->add_option("config", audit_config, "JSON model config for the codebook checks");
    audit->add_option("--n", audit_options.n, "figure-mode codebook size");
    audit->add_option("--beta-tau", audit_options.beta_tau, "figure-mode beta * mean duration");
    audit->add_option("--power", audit_options.power, "transmit power");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : relcode::cli::kExitInputError;
    }

    if (solve->parsed()) {
        return relcode::cli::cmd_solve(solve_config, std::cout, std::cerr);
    }
    if (sweep->parsed()) {
        if (!sweep_config.empty()) {
            sweep_options.config_path = sweep_config;
        }
        if (sweep->count("--n") > 0) {
            sweep_options.n = sweep_n;
        }
        return relcode::cli::cmd_sweep(sweep_options, std::cerr);
    }
    if (vcrit->parsed()) {
        if (!vcrit_config.empty()) {
            vcrit_options.config_path = vcrit_config;
        }
        return relcode::cli::cmd_vcrit(vcrit_options, std::cout, std::cerr);
    }
    if (simulate->parsed()) {
        if (sim_v0 >= 0.0) {
            sim_options.v0 = sim_v0;
        }
        if (sim_sigma >= 0.0) {
            sim_options.sigma = sim_sigma;
        }
        return relcode::cli::cmd_simulate(sim_options, std::cerr);
    }
    if (audit->parsed()) {
        if (!audit_config.empty()) {
            audit_options.config_path = audit_config;
        }
        return relcode::cli::cmd_audit(audit_options, std::cout, std::cerr);
    }
    return relcode::cli::kExitInputError;
}
