#include "relcode/codebook.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace relcode {

Codebook::Codebook(std::vector<double> durations) : durations_(std::move(durations)) {
    if (durations_.empty()) {
        throw InvalidParameter("codebook must contain at least one duration");
    }
    for (double tau : durations_) {
        if (!(tau > 0.0) || !std::isfinite(tau)) {
            throw InvalidParameter("codebook durations must be positive and finite, got " +
                                   std::to_string(tau));
        }
    }
}

double Codebook::min_duration() const noexcept {
    return *std::min_element(durations_.begin(), durations_.end());
}

double Codebook::max_duration() const noexcept {
    return *std::max_element(durations_.begin(), durations_.end());
}

double log_partition_function(const Codebook& codebook, double beta) {
    if (!std::isfinite(beta)) {
        throw InvalidParameter("beta must be finite");
    }
    // max-shift so that the largest exponent is exactly 0
    double m = -std::numeric_limits<double>::infinity();
    for (double tau : codebook.durations()) {
        m = std::max(m, -beta * tau);
    }
    double sum = 0.0;
    for (double tau : codebook.durations()) {
        sum += std::exp(-beta * tau - m);
    }
    return m + std::log(sum);
}

double partition_function(const Codebook& codebook, double beta) {
    return std::exp(log_partition_function(codebook, beta));
}

std::vector<double> max_entropy_distribution(const Codebook& codebook, double beta) {
    const double log_z = log_partition_function(codebook, beta);
    std::vector<double> dist;
    dist.reserve(codebook.size());
    for (double tau : codebook.durations()) {
        dist.push_back(std::exp(-beta * tau - log_z));
    }
    return dist;
}

double mean_duration(const Codebook& codebook, std::span<const double> dist) {
    if (dist.size() != codebook.size()) {
        throw InvalidParameter("distribution length does not match codebook size");
    }
    double mean = 0.0;
    for (std::size_t j = 0; j < dist.size(); ++j) {
        mean += dist[j] * codebook.durations()[j];
    }
    return mean;
}

namespace {

double constrained_mean(const Codebook& codebook, double beta) {
    auto dist = max_entropy_distribution(codebook, beta);
    return mean_duration(codebook, dist);
}

} // namespace

double solve_beta(const Codebook& codebook, double target_mean) {
    const double tau_min = codebook.min_duration();
    const double tau_max = codebook.max_duration();
    if (tau_min == tau_max) {
        throw DegenerateConstraint("all codebook durations are equal");
    }
    if (!(target_mean > tau_min) || !(target_mean < tau_max)) {
        throw OutOfRange("target mean " + std::to_string(target_mean) +
                         " outside open interval (tau_min, tau_max)");
    }

    // mean(beta) is strictly decreasing: mean(-inf) -> tau_max, mean(+inf) -> tau_min
    double lo = -1.0;
    double hi = 1.0;
    while (constrained_mean(codebook, lo) < target_mean) {
        lo *= 2.0;
    }
    while (constrained_mean(codebook, hi) > target_mean) {
        hi *= 2.0;
    }

    // bisect down to machine precision on beta; this leaves the mean well
    // inside its 1e-12 relative tolerance
    double beta = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        const double width_tol = 1e-15 * std::max({1.0, std::abs(lo), std::abs(hi)});
        if (hi - lo <= width_tol) {
            break;
        }
        beta = 0.5 * (lo + hi);
        const double mean = constrained_mean(codebook, beta);
        if (mean == target_mean) {
            return beta;
        }
        if (mean > target_mean) {
            lo = beta;
        } else {
            hi = beta;
        }
    }
    return beta;
}

double entropy_per_symbol(std::span<const double> dist) {
    double s = 0.0;
    for (double p : dist) {
        if (p < 0.0 || p > 1.0 || !std::isfinite(p)) {
            throw InvalidParameter("probability component outside [0,1]");
        }
        if (p > 0.0) {
            s -= p * std::log(p);
        }
    }
    return std::max(s, 0.0);
}

double info_temperature(double power, double beta) {
    if (beta == 0.0) {
        throw DivisionByZero("beta = 0 implies infinite information temperature");
    }
    return power / beta;
}

double transmission_energy(double power, double mean_tau) {
    if (!(power > 0.0) || !(mean_tau > 0.0)) {
        throw InvalidParameter("power and mean duration must be positive");
    }
    return power * mean_tau;
}

double log_multiplicity(std::span<const std::int64_t> counts) {
    std::int64_t total = 0;
    for (std::int64_t c : counts) {
        if (c < 0) {
            throw InvalidParameter("counts must be nonnegative");
        }
        total += c;
    }
    if (total == 0) {
        throw InvalidParameter("at least one count must be positive");
    }
    double result = std::lgamma(static_cast<double>(total) + 1.0);
    for (std::int64_t c : counts) {
        result -= std::lgamma(static_cast<double>(c) + 1.0);
    }
    return std::max(result, 0.0);
}

FigureModel figure_model(std::size_t n, double beta_tau) {
    if (n < 1) {
        throw InvalidParameter("figure model requires n >= 1");
    }
    if (!(beta_tau > 0.0) || !std::isfinite(beta_tau)) {
        throw InvalidParameter("beta_tau must be positive and finite");
    }
    return FigureModel{n, beta_tau, beta_tau + std::log(static_cast<double>(n))};
}

EncodingModel::EncodingModel(Codebook codebook, double beta, double power, double light_speed)
    : codebook_(std::move(codebook)), beta_(beta), power_(power), light_speed_(light_speed) {
    if (!std::isfinite(beta_)) {
        throw InvalidParameter("beta must be finite");
    }
    if (!(power_ > 0.0) || !std::isfinite(power_)) {
        throw InvalidParameter("power must be positive and finite");
    }
    if (!(light_speed_ > 0.0) || !std::isfinite(light_speed_)) {
        throw InvalidParameter("light speed must be positive and finite");
    }
    log_partition_ = log_partition_function(codebook_, beta_);
    distribution_ = max_entropy_distribution(codebook_, beta_);
    mean_duration_ = relcode::mean_duration(codebook_, distribution_);
    entropy_ = beta_ * mean_duration_ + log_partition_;
}

EncodingModel EncodingModel::with_mean_duration(Codebook codebook, double target_mean,
                                                double power, double light_speed) {
    const double beta = solve_beta(codebook, target_mean);
    return EncodingModel(std::move(codebook), beta, power, light_speed);
}

double EncodingModel::partition() const noexcept {
    return std::exp(log_partition_);
}

double EncodingModel::info_temperature() const {
    return relcode::info_temperature(power_, beta_);
}

double EncodingModel::transmission_energy() const {
    return relcode::transmission_energy(power_, mean_duration_);
}

} // namespace relcode
