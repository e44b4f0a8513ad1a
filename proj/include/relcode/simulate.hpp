#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "relcode/codebook.hpp"
#include "relcode/errors.hpp"

namespace relcode {

enum class Smoothing { None, AddHalf };

struct SimulationConfig {
    EncodingModel model;
    double v = 0.0;
    double v0 = 0.0;
    std::size_t num_symbols = 1;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    double jitter_sigma = 0.0; // relative duration noise; 0 = noiseless
};

struct SimulationReport {
    std::vector<double> empirical_dist;
    double empirical_kld_to_sender = 0.0;
    std::vector<double> scale_estimates;
    double estimate_mean = 0.0;
    double estimate_variance = 0.0;
    double cr_bound = 0.0;
    double implied_v = 0.0; // NaN when the mean estimate maps outside [0, c)
    std::uint64_t seed_used = 0;
    std::string generator_name;
};

/// Name of the build-fixed RNG stream ("mt19937_64").
const char* rng_name();

/// Per-trial seed: seed ^ (t * 0x9E3779B97F4A7C15), mod 2^64.
std::uint64_t derive_trial_seed(std::uint64_t seed, std::uint64_t trial);

/// i.i.d. symbol indices drawn from the sender distribution by inverse CDF.
std::vector<std::size_t> sample_sequence(const EncodingModel& model, std::size_t num_symbols,
                                         std::uint64_t seed);

// Observed durations d_k = lambda * tau_{i_k} * (1 + sigma * eta_k) with
// standard normal eta; draws making the factor nonpositive are rejected and
// redrawn so every duration stays positive.
std::vector<double> observe_durations(std::span<const std::size_t> indices,
                                      const Codebook& codebook, double lambda,
                                      double jitter_sigma, std::uint64_t seed);

std::vector<double> empirical_distribution(std::span<const std::size_t> indices, std::size_t n,
                                           Smoothing smoothing);

// Scale-factor estimate. Noiseless case: the single lambda consistent with
// every observation to 1e-9 relative. Noisy case: golden-section maximization
// of the mixture log-likelihood over [0.5, 2] x median duration ratio.
double ml_scale_estimate(std::span<const double> durations, const Codebook& codebook,
                         double beta, double jitter_sigma);

/// Speed whose dilation ratio against v0 equals lambda; OutOfDomain if lambda*gamma(v0) < 1.
double implied_velocity(double lambda, double v0, double c);

/// One-sequence run filling the distribution part of the report.
SimulationReport empirical_kld_experiment(const SimulationConfig& config);

// Full estimator study: `trials` independent estimations plus the numerical
// Cramer-Rao bound 1/(N * I_obs) from a quadrature oracle over the
// observation mixture. Requires jitter_sigma > 0 and trials >= 2.
SimulationReport cramer_rao_experiment(const SimulationConfig& config);

// Everything the CLI report needs: distribution part plus estimator part
// (noiseless runs permitted; cr_bound is 0 when sigma = 0).
SimulationReport run_simulation(const SimulationConfig& config);

} // namespace relcode
