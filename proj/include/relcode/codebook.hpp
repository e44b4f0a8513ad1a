#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "relcode/errors.hpp"

namespace relcode {

// Alphabet of symbol types, each identified by its transmission duration in
// seconds. Durations must be positive and finite; order is significant.
class Codebook {
public:
    explicit Codebook(std::vector<double> durations);

    const std::vector<double>& durations() const noexcept { return durations_; }
    std::size_t size() const noexcept { return durations_.size(); }
    double duration(std::size_t j) const { return durations_.at(j); }
    double min_duration() const noexcept;
    double max_duration() const noexcept;

private:
    std::vector<double> durations_;
};

/// ln Z(beta) = ln sum_j exp(-beta tau_j), evaluated with max-shift centering.
double log_partition_function(const Codebook& codebook, double beta);

/// Z(beta) = sum_j exp(-beta tau_j).
double partition_function(const Codebook& codebook, double beta);

/// p_j = exp(-beta tau_j) / Z, in duration order.
std::vector<double> max_entropy_distribution(const Codebook& codebook, double beta);

/// <tau> = sum_j p_j tau_j for an explicit probability vector.
double mean_duration(const Codebook& codebook, std::span<const double> dist);

// Inverts the mean-duration constraint: finds the unique beta with
// mean_duration(max_entropy_distribution(beta)) == target_mean. The mean is
// strictly decreasing in beta, so the bracket is expanded by doubling until
// the sign changes, then bisected to 1e-12 relative on the mean.
double solve_beta(const Codebook& codebook, double target_mean);

/// Shannon entropy -sum p ln p in nats, with 0 ln 0 = 0.
double entropy_per_symbol(std::span<const double> dist);

/// T_info = P / beta.
double info_temperature(double power, double beta);

/// E = P * <tau>.
double transmission_energy(double power, double mean_tau);

/// ln(N! / prod_j N_j!) via lgamma, N = sum_j N_j.
double log_multiplicity(std::span<const std::int64_t> counts);

// Figure-mode parameterization: codebook size n and the dimensionless
// product beta*<tau>, with sender entropy S = beta*<tau> + ln n. Matches the
// uniform-duration approximation Z ~ n used by the reference figures.
struct FigureModel {
    std::size_t n;
    double beta_tau;
    double entropy;
};

FigureModel figure_model(std::size_t n, double beta_tau);

// A codebook equipped with inverse information temperature beta, average
// transmit power P and light speed c. Derived quantities (distribution,
// partition function, mean duration, entropy) are computed once at
// construction; instances are immutable afterwards.
class EncodingModel {
public:
    EncodingModel(Codebook codebook, double beta, double power, double light_speed);

    // Solves beta from a mean-duration constraint instead of taking it directly.
    static EncodingModel with_mean_duration(Codebook codebook, double target_mean,
                                            double power, double light_speed);

    const Codebook& codebook() const noexcept { return codebook_; }
    double beta() const noexcept { return beta_; }
    double power() const noexcept { return power_; }
    double light_speed() const noexcept { return light_speed_; }

    double log_partition() const noexcept { return log_partition_; }
    double partition() const noexcept;
    const std::vector<double>& distribution() const noexcept { return distribution_; }
    double mean_duration() const noexcept { return mean_duration_; }
    /// S = beta <tau> + ln Z, nats per symbol.
    double entropy() const noexcept { return entropy_; }
    double info_temperature() const;
    double transmission_energy() const;

private:
    Codebook codebook_;
    double beta_;
    double power_;
    double light_speed_;
    double log_partition_;
    std::vector<double> distribution_;
    double mean_duration_;
    double entropy_;
};

} // namespace relcode
