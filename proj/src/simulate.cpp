#include "relcode/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "relcode/infogeo.hpp"
#include "relcode/relativity.hpp"

namespace relcode {

namespace {

constexpr double kPi = 3.14159265358979323846;

double uniform53(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Box-Muller; the sine partner is discarded so draws map 2:1 onto the stream.
double standard_normal(std::mt19937_64& rng) {
    const double u1 = 1.0 - uniform53(rng); // (0, 1]
    const double u2 = uniform53(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

void check_config(const SimulationConfig& config) {
    const double c = config.model.light_speed();
    if (!(config.v >= 0.0) || !(config.v < c) || !(config.v0 >= 0.0) || !(config.v0 < c)) {
        throw OutOfDomain("simulation speeds must lie in [0, c)");
    }
    if (config.num_symbols < 1) {
        throw InvalidParameter("num_symbols must be >= 1");
    }
    if (config.trials < 1) {
        throw InvalidParameter("trials must be >= 1");
    }
    if (!(config.jitter_sigma >= 0.0)) {
        throw InvalidParameter("jitter_sigma must be >= 0");
    }
}

// log of sum_j p_j N(d; lambda tau_j, sigma lambda tau_j), via max-shift
double mixture_log_density(double d, const std::vector<double>& probs,
                           const std::vector<double>& durations, double lambda, double sigma) {
    double best = -std::numeric_limits<double>::infinity();
    std::vector<double> terms(probs.size());
    for (std::size_t j = 0; j < probs.size(); ++j) {
        const double mu = lambda * durations[j];
        const double s = sigma * mu;
        const double z = (d - mu) / s;
        terms[j] = std::log(probs[j]) - 0.5 * z * z - std::log(s) - 0.5 * std::log(2.0 * kPi);
        best = std::max(best, terms[j]);
    }
    double sum = 0.0;
    for (double t : terms) {
        sum += std::exp(t - best);
    }
    return best + std::log(sum);
}

double mixture_log_likelihood(std::span<const double> observed, const std::vector<double>& probs,
                              const std::vector<double>& durations, double lambda, double sigma) {
    double ll = 0.0;
    for (double d : observed) {
        ll += mixture_log_density(d, probs, durations, lambda, sigma);
    }
    return ll;
}

// Expected log-likelihood g(l) = E_{d ~ f(.; lambda)}[ln f(d; l)], evaluated
// by composite Simpson quadrature per mixture component.
double expected_log_likelihood(const std::vector<double>& probs,
                               const std::vector<double>& durations, double lambda, double sigma,
                               double eval_lambda) {
    constexpr int kIntervals = 800; // even
    double total = 0.0;
    for (std::size_t j = 0; j < probs.size(); ++j) {
        const double mu = lambda * durations[j];
        const double s = sigma * mu;
        const double lo = mu - 12.0 * s;
        const double hi = mu + 12.0 * s;
        const double step = (hi - lo) / kIntervals;
        double acc = 0.0;
        for (int i = 0; i <= kIntervals; ++i) {
            const double d = lo + step * i;
            const double z = (d - mu) / s;
            const double weight_density =
                std::exp(-0.5 * z * z) / (s * std::sqrt(2.0 * kPi));
            const double integrand =
                weight_density * mixture_log_density(d, probs, durations, eval_lambda, sigma);
            const double w = (i == 0 || i == kIntervals) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
            acc += w * integrand;
        }
        total += probs[j] * acc * step / 3.0;
    }
    return total;
}

// Per-observation Fisher information of the mixture model in lambda:
// -d^2/dl^2 E[ln f(d; l)] at l = lambda, by central finite differences.
double observation_fisher(const std::vector<double>& probs, const std::vector<double>& durations,
                          double lambda, double sigma) {
    const double h = 1e-3 * lambda;
    const double g_minus = expected_log_likelihood(probs, durations, lambda, sigma, lambda - h);
    const double g_zero = expected_log_likelihood(probs, durations, lambda, sigma, lambda);
    const double g_plus = expected_log_likelihood(probs, durations, lambda, sigma, lambda + h);
    return -(g_plus - 2.0 * g_zero + g_minus) / (h * h);
}

} // namespace

const char* rng_name() {
    return "mt19937_64";
}

std::uint64_t derive_trial_seed(std::uint64_t seed, std::uint64_t trial) {
    return seed ^ (trial * 0x9E3779B97F4A7C15ULL);
}

std::vector<std::size_t> sample_sequence(const EncodingModel& model, std::size_t num_symbols,
                                         std::uint64_t seed) {
    if (num_symbols < 1) {
        throw InvalidParameter("num_symbols must be >= 1");
    }
    const auto& probs = model.distribution();
    std::vector<double> cumulative(probs.size());
    std::partial_sum(probs.begin(), probs.end(), cumulative.begin());
    cumulative.back() = 1.0;

    std::mt19937_64 rng(seed);
    std::vector<std::size_t> indices(num_symbols);
    for (std::size_t k = 0; k < num_symbols; ++k) {
        const double u = uniform53(rng);
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        indices[k] = std::min<std::size_t>(it - cumulative.begin(), probs.size() - 1);
    }
    return indices;
}

std::vector<double> observe_durations(std::span<const std::size_t> indices,
                                      const Codebook& codebook, double lambda,
                                      double jitter_sigma, std::uint64_t seed) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw InvalidParameter("lambda must be positive and finite");
    }
    if (!(jitter_sigma >= 0.0)) {
        throw InvalidParameter("jitter_sigma must be >= 0");
    }
    std::mt19937_64 rng(seed);
    std::vector<double> observed(indices.size());
    for (std::size_t k = 0; k < indices.size(); ++k) {
        const double base = lambda * codebook.duration(indices[k]);
        if (jitter_sigma == 0.0) {
            observed[k] = base;
            continue;
        }
        double factor = 1.0 + jitter_sigma * standard_normal(rng);
        while (!(factor > 0.0)) {
            factor = 1.0 + jitter_sigma * standard_normal(rng);
        }
        observed[k] = base * factor;
    }
    return observed;
}

std::vector<double> empirical_distribution(std::span<const std::size_t> indices, std::size_t n,
                                           Smoothing smoothing) {
    if (n < 1) {
        throw InvalidParameter("alphabet size must be >= 1");
    }
    std::vector<double> counts(n, 0.0);
    for (std::size_t idx : indices) {
        if (idx >= n) {
            throw InvalidParameter("symbol index out of range");
        }
        counts[idx] += 1.0;
    }
    const double total = static_cast<double>(indices.size());
    std::vector<double> dist(n);
    if (smoothing == Smoothing::AddHalf) {
        const double denom = total + 0.5 * static_cast<double>(n);
        for (std::size_t j = 0; j < n; ++j) {
            dist[j] = (counts[j] + 0.5) / denom;
        }
    } else {
        for (std::size_t j = 0; j < n; ++j) {
            dist[j] = counts[j] / total;
        }
    }
    return dist;
}

double ml_scale_estimate(std::span<const double> durations, const Codebook& codebook,
                         double beta, double jitter_sigma) {
    if (durations.empty()) {
        throw InvalidParameter("no observations");
    }
    for (double d : durations) {
        if (!(d > 0.0) || !std::isfinite(d)) {
            throw InvalidParameter("observed durations must be positive and finite");
        }
    }
    const auto& taus = codebook.durations();

    if (jitter_sigma == 0.0) {
        // Every observation must be lambda * tau_j for one common lambda.
        const double rel_tol = 1e-9;
        for (double tau0 : taus) {
            const double candidate = durations[0] / tau0;
            bool consistent = true;
            for (double d : durations) {
                bool matched = false;
                for (double tau : taus) {
                    if (std::abs(d - candidate * tau) <= rel_tol * d) {
                        matched = true;
                        break;
                    }
                }
                if (!matched) {
                    consistent = false;
                    break;
                }
            }
            if (consistent) {
                return candidate;
            }
        }
        throw InconsistentObservations("no single scale factor explains all observations");
    }

    const auto probs = max_entropy_distribution(codebook, beta);
    const double model_mean = mean_duration(codebook, probs);

    // initial guess, then per-observation ratios against the nearest symbol
    double mean_d = 0.0;
    for (double d : durations) {
        mean_d += d;
    }
    mean_d /= static_cast<double>(durations.size());
    const double guess = mean_d / model_mean;

    std::vector<double> ratios;
    ratios.reserve(durations.size());
    for (double d : durations) {
        double best_ratio = d / taus[0];
        double best_err = std::abs(best_ratio - guess);
        for (double tau : taus) {
            const double r = d / tau;
            const double err = std::abs(r - guess);
            if (err < best_err) {
                best_err = err;
                best_ratio = r;
            }
        }
        ratios.push_back(best_ratio);
    }
    std::nth_element(ratios.begin(), ratios.begin() + ratios.size() / 2, ratios.end());
    const double median_ratio = ratios[ratios.size() / 2];
    if (!(median_ratio > 0.0) || !std::isfinite(median_ratio)) {
        throw BracketFailure("could not bracket the scale factor");
    }

    // golden-section maximization of the log-likelihood
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = 0.5 * median_ratio;
    double b = 2.0 * median_ratio;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = mixture_log_likelihood(durations, probs, taus, x1, jitter_sigma);
    double f2 = mixture_log_likelihood(durations, probs, taus, x2, jitter_sigma);
    while (b - a > 1e-10) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = mixture_log_likelihood(durations, probs, taus, x2, jitter_sigma);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = mixture_log_likelihood(durations, probs, taus, x1, jitter_sigma);
        }
    }
    return 0.5 * (a + b);
}

double implied_velocity(double lambda, double v0, double c) {
    const double gamma_hat = lambda * lorentz_gamma(v0, c);
    if (gamma_hat < 1.0) {
        throw OutOfDomain("scale estimate maps to no real speed");
    }
    return c * std::sqrt(1.0 - 1.0 / (gamma_hat * gamma_hat));
}

SimulationReport empirical_kld_experiment(const SimulationConfig& config) {
    check_config(config);
    SimulationReport report;
    report.seed_used = config.seed;
    report.generator_name = rng_name();

    const auto indices = sample_sequence(config.model, config.num_symbols, config.seed);
    report.empirical_dist =
        empirical_distribution(indices, config.model.codebook().size(), Smoothing::None);
    report.empirical_kld_to_sender = kld(report.empirical_dist, config.model.distribution());
    report.implied_v = std::numeric_limits<double>::quiet_NaN();
    return report;
}

namespace {

void run_estimation_trials(const SimulationConfig& config, SimulationReport& report) {
    const double c = config.model.light_speed();
    const double lambda = dilation_ratio(config.v, config.v0, c);
    const auto& codebook = config.model.codebook();

    report.scale_estimates.resize(config.trials);
    for (std::size_t t = 0; t < config.trials; ++t) {
        const std::uint64_t trial_seed = derive_trial_seed(config.seed, t);
        const auto indices = sample_sequence(config.model, config.num_symbols, trial_seed);
        const auto observed = observe_durations(indices, codebook, lambda, config.jitter_sigma,
                                                splitmix64(trial_seed));
        report.scale_estimates[t] =
            ml_scale_estimate(observed, codebook, config.model.beta(), config.jitter_sigma);
    }

    const double n_trials = static_cast<double>(config.trials);
    double mean = 0.0;
    for (double est : report.scale_estimates) {
        mean += est;
    }
    mean /= n_trials;
    report.estimate_mean = mean;

    double variance = 0.0;
    if (config.trials >= 2) {
        for (double est : report.scale_estimates) {
            variance += (est - mean) * (est - mean);
        }
        variance /= (n_trials - 1.0);
    }
    report.estimate_variance = variance;

    try {
        report.implied_v = implied_velocity(mean, config.v0, c);
    } catch (const OutOfDomain&) {
        report.implied_v = std::numeric_limits<double>::quiet_NaN();
    }

    if (config.jitter_sigma > 0.0) {
        const double fisher = observation_fisher(config.model.distribution(),
                                                 codebook.durations(), lambda,
                                                 config.jitter_sigma);
        report.cr_bound = 1.0 / (static_cast<double>(config.num_symbols) * fisher);
    } else {
        report.cr_bound = 0.0;
    }
}

} // namespace

SimulationReport cramer_rao_experiment(const SimulationConfig& config) {
    check_config(config);
    if (!(config.jitter_sigma > 0.0)) {
        throw InvalidParameter("Cramer-Rao experiment requires jitter_sigma > 0");
    }
    if (config.trials < 2) {
        throw InvalidParameter("variance needs at least 2 trials");
    }
    SimulationReport report = empirical_kld_experiment(config);
    run_estimation_trials(config, report);
    return report;
}

SimulationReport run_simulation(const SimulationConfig& config) {
    check_config(config);
    SimulationReport report = empirical_kld_experiment(config);
    run_estimation_trials(config, report);
    return report;
}

} // namespace relcode
