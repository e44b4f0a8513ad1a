#include "relcode/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "relcode/audit.hpp"
#include "relcode/config.hpp"
#include "relcode/infogeo.hpp"
#include "relcode/relativity.hpp"
#include "relcode/simulate.hpp"
#include "relcode/thermo.hpp"

namespace relcode::cli {

std::string format_value(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return buf;
}

namespace {

std::string field_or_overflow(double x) {
    return std::isfinite(x) ? format_value(x) : "overflow";
}

int map_error_exit(const Error& e, std::ostream& err, int fallback) {
    err << e.name() << ": " << e.what() << "\n";
    if (dynamic_cast<const OutOfRange*>(&e) || dynamic_cast<const DegenerateConstraint*>(&e)) {
        return kExitSolverDomain;
    }
    if (dynamic_cast<const InvalidParameter*>(&e)) {
        return kExitInputError;
    }
    return fallback;
}

} // namespace

int cmd_solve(const std::string& config_path, std::ostream& out, std::ostream& err) {
    LoadedConfig config{EncodingModel(Codebook({1.0}), 0.0, 1.0, 1.0)};
    try {
        config = load_config(config_path);
    } catch (const OutOfRange& e) {
        err << e.name() << ": " << e.what() << "\n";
        return kExitSolverDomain;
    } catch (const DegenerateConstraint& e) {
        err << e.name() << ": " << e.what() << "\n";
        return kExitSolverDomain;
    } catch (const Error& e) {
        err << e.name() << ": " << e.what() << "\n";
        return kExitInputError;
    }

    const auto& model = config.model;
    const double t_info = model.beta() != 0.0 ? model.power() / model.beta()
                                              : std::numeric_limits<double>::infinity();
    out << "beta=" << format_value(model.beta()) << "\n";
    out << "Z=" << format_value(model.partition()) << "\n";
    out << "mean_tau=" << format_value(model.mean_duration()) << "\n";
    out << "S=" << format_value(model.entropy()) << "\n";
    out << "T_info=" << format_value(t_info) << "\n";
    out << "E=" << format_value(model.transmission_energy()) << "\n";
    out << "ln_Z=" << format_value(model.log_partition()) << "\n";
    return kExitOk;
}

int cmd_sweep(const SweepOptions& options, std::ostream& err) {
    if (options.quantity != "kld" && options.quantity != "fisher" &&
        options.quantity != "free-energy" && options.quantity != "all") {
        err << "unknown quantity: " << options.quantity << "\n";
        return kExitInputError;
    }
    if (!(options.v_min >= 0.0) || !(options.v_min < options.v_max) ||
        !(options.v_max < options.c) || options.steps < 2) {
        err << "bad sweep grid\n";
        return kExitInputError;
    }
    if (options.config_path.has_value() == options.n.has_value()) {
        err << "exactly one of a config file or --n (figure mode) is required\n";
        return kExitInputError;
    }

    std::optional<LoadedConfig> loaded;
    std::optional<FigureModel> figure;
    double entropy = 0.0;
    double beta_tau = options.beta_tau;
    double power = options.power;
    double mean_tau = 1.0;
    try {
        if (options.config_path) {
            loaded = load_config(*options.config_path);
            entropy = loaded->model.entropy();
            beta_tau = loaded->model.beta() * loaded->model.mean_duration();
            power = loaded->model.power();
            mean_tau = loaded->model.mean_duration();
        } else {
            figure = figure_model(*options.n, options.beta_tau);
            entropy = figure->entropy;
        }
    } catch (const Error& e) {
        return map_error_exit(e, err, kExitInputError);
    }
    const double c = loaded ? loaded->model.light_speed() : options.c;
    const double v0 = loaded ? loaded->v0 : 0.0;
    const double regime_tol = 1e-9 * power * mean_tau;

    std::ofstream csv(options.output, std::ios::binary);
    if (!csv) {
        err << "cannot open output file: " << options.output << "\n";
        return kExitInputError;
    }
    csv << "v,gamma,kld_simplified,kld_closed_form,fisher,f_receiver,regime\n";

    for (std::size_t i = 0; i < options.steps; ++i) {
        const double v = options.v_min +
                         (options.v_max - options.v_min) * static_cast<double>(i) /
                             static_cast<double>(options.steps - 1);
        csv << format_value(v) << ",";

        std::string gamma_s = "overflow";
        std::string kld_simple_s = "overflow";
        std::string kld_closed_s; // empty in figure mode
        std::string fisher_s = "overflow";
        std::string f_receiver_s = "overflow";
        std::string regime_s = "overflow";
        try {
            gamma_s = field_or_overflow(lorentz_gamma(v, c));
            kld_simple_s = field_or_overflow(kld_simplified(entropy, v, c));
            if (beta_tau > 0.0) {
                fisher_s = field_or_overflow(fisher_paper(beta_tau, v, c));
            }
            double f_receiver = std::numeric_limits<double>::quiet_NaN();
            if (loaded) {
                kld_closed_s = field_or_overflow(kld_closed_form(loaded->model, v, v0).value);
                if (loaded->model.beta() != 0.0) {
                    f_receiver =
                        free_energy_receiver(loaded->model, v, v0, KldMode::ClosedForm);
                }
            } else {
                f_receiver = free_energy_receiver_figure(*figure, power, v, c);
            }
            if (std::isfinite(f_receiver)) {
                f_receiver_s = format_value(f_receiver);
                regime_s = to_string(classify_regime(f_receiver, regime_tol));
            }
        } catch (const NumericOverflow&) {
            // fields initialized above stay "overflow"
        } catch (const Error& e) {
            return map_error_exit(e, err, kExitInputError);
        }
        csv << gamma_s << "," << kld_simple_s << "," << kld_closed_s << "," << fisher_s << ","
            << f_receiver_s << "," << regime_s << "\n";
    }
    csv.close();

    if (options.emit_plot_script) {
        std::ofstream script(options.output + ".gnuplot", std::ios::binary);
        script << "set datafile separator ','\n"
               << "set key autotitle columnhead\n"
               << "set xlabel 'v'\n"
               << "plot '" << options.output << "' using 1:3 with lines, \\\n"
               << "     '" << options.output << "' using 1:5 with lines, \\\n"
               << "     '" << options.output << "' using 1:6 with lines\n";
    }
    return kExitOk;
}

int cmd_vcrit(const VcritOptions& options, std::ostream& out, std::ostream& err) {
    std::size_t successes = 0;
    if (options.variant == "paper") {
        if (options.n_list.empty()) {
            err << "paper variant requires --n values\n";
            return kExitInputError;
        }
        for (std::size_t n : options.n_list) {
            out << n << ",";
            try {
                out << format_value(critical_velocity_approx(n, options.beta_tau, options.c));
                ++successes;
            } catch (const Error& e) {
                out << e.name();
            }
            out << "\n";
        }
    } else if (options.variant == "consistent") {
        if (!options.config_path) {
            err << "consistent variant requires a config file\n";
            return kExitInputError;
        }
        try {
            const LoadedConfig config = load_config(*options.config_path);
            try {
                out << format_value(critical_velocity_consistent(config.model)) << "\n";
                ++successes;
            } catch (const Error& e) {
                out << e.name() << "\n";
            }
        } catch (const Error& e) {
            return map_error_exit(e, err, kExitInputError);
        }
    } else {
        err << "unknown variant: " << options.variant << "\n";
        return kExitInputError;
    }
    return successes > 0 ? kExitOk : kExitNoRows;
}

int cmd_simulate(const SimulateOptions& options, std::ostream& err) {
    try {
        const LoadedConfig loaded = load_config(options.config_path);
        SimulationConfig config{loaded.model,
                                options.v,
                                options.v0.value_or(loaded.v0),
                                options.num_symbols,
                                options.trials,
                                options.seed,
                                options.sigma.value_or(loaded.jitter_sigma)};
        const SimulationReport report = run_simulation(config);

        std::ofstream file(options.output, std::ios::binary);
        if (!file) {
            err << "cannot open output file: " << options.output << "\n";
            return kExitInputError;
        }
        file << "empirical_dist=";
        for (std::size_t j = 0; j < report.empirical_dist.size(); ++j) {
            file << (j ? "," : "") << format_value(report.empirical_dist[j]);
        }
        file << "\n";
        file << "empirical_kld_to_sender=" << format_value(report.empirical_kld_to_sender)
             << "\n";
        file << "scale_estimates=";
        for (std::size_t t = 0; t < report.scale_estimates.size(); ++t) {
            file << (t ? "," : "") << format_value(report.scale_estimates[t]);
        }
        file << "\n";
        file << "estimate_mean=" << format_value(report.estimate_mean) << "\n";
        file << "estimate_variance=" << format_value(report.estimate_variance) << "\n";
        file << "cr_bound=" << format_value(report.cr_bound) << "\n";
        file << "implied_v=" << format_value(report.implied_v) << "\n";
        file << "seed_used=" << report.seed_used << "\n";
        file << "generator_name=" << report.generator_name << "\n";
        return kExitOk;
    } catch (const InvalidParameter& e) {
        err << e.name() << ": " << e.what() << "\n";
        return kExitInputError;
    } catch (const OutOfRange& e) {
        err << e.name() << ": " << e.what() << "\n";
        return kExitSolverDomain;
    } catch (const DegenerateConstraint& e) {
        err << e.name() << ": " << e.what() << "\n";
        return kExitSolverDomain;
    } catch (const Error& e) {
        err << e.name() << ": " << e.what() << "\n";
        return kExitSimulation;
    }
}

int cmd_audit(const AuditOptions& options, std::ostream& out, std::ostream& err) {
    try {
        const FigureModel figure = figure_model(options.n, options.beta_tau);
        std::optional<EncodingModel> model;
        if (options.config_path) {
            model = load_config(*options.config_path).model;
        } else {
            model = EncodingModel(Codebook({1.0, 1.2}), 1.0, options.power, 1.0);
        }
        for (const auto& check : run_audit(*model, figure, options.power)) {
            out << format_audit_line(check) << "\n";
        }
        return kExitOk;
    } catch (const Error& e) {
        err << e.name() << ": " << e.what() << "\n";
        return kExitInputError;
    }
}

} // namespace relcode::cli
