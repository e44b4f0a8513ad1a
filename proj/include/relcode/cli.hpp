#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace relcode::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitSolverDomain = 3;
inline constexpr int kExitNoRows = 4;
inline constexpr int kExitSimulation = 5;

struct SweepOptions {
    std::string quantity = "all"; // kld | fisher | free-energy | all
    std::optional<std::string> config_path;
    std::optional<std::size_t> n; // figure mode when set
    double beta_tau = 1.0;
    double v_min = 0.0;
    double v_max = 0.99;
    std::size_t steps = 100;
    double c = 1.0;
    double power = 1.0;
    std::string output;
    bool emit_plot_script = false;
};

struct VcritOptions {
    std::vector<std::size_t> n_list;
    std::optional<std::string> config_path;
    double beta_tau = 1.0;
    double c = 1.0;
    std::string variant = "paper"; // paper | consistent
};

struct SimulateOptions {
    std::string config_path;
    double v = 0.0;
    std::optional<double> v0;    // overrides the config value
    std::optional<double> sigma; // overrides the config value
    std::size_t num_symbols = 1000;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    std::string output;
};

struct AuditOptions {
    std::optional<std::string> config_path; // default codebook {1, 1.2}, beta = 1
    std::size_t n = 5;
    double beta_tau = 1.0;
    double power = 1.0;
};

int cmd_solve(const std::string& config_path, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepOptions& options, std::ostream& err);
int cmd_vcrit(const VcritOptions& options, std::ostream& out, std::ostream& err);
int cmd_simulate(const SimulateOptions& options, std::ostream& err);
int cmd_audit(const AuditOptions& options, std::ostream& out, std::ostream& err);

/// Number formatted with 15 significant digits, locale-independent.
std::string format_value(double x);

} // namespace relcode::cli
