#pragma once

#include <functional>
#include <span>

#include "relcode/codebook.hpp"
#include "relcode/errors.hpp"

namespace relcode {

// Closed-form KLD between receiver and sender distributions, split into its
// two algebraic pieces: value = beta (1 - lambda) <tau>_b + ln(Z^a / Z^b),
// where <tau>_b is the expectation of sender durations under receiver weights.
struct KldBreakdown {
    double value;
    double mean_tau_receiver;
    double log_partition_ratio;
};

/// D(p || q) = sum p ln(p/q), nats. Requires q > 0 wherever p > 0.
double kld(std::span<const double> p, std::span<const double> q);

/// Closed-form D(p^b || p^a) at lambda = gamma(v)/gamma(v0).
KldBreakdown kld_closed_form(const EncodingModel& model, double v, double v0);

/// Simplified curve (1 - 1/gamma(v)) * S^a used by the figure sweeps.
double kld_simplified(double entropy_sender, double v, double c);

/// Reverse direction D(p^a || p^b); needed by the cross-entropy audit.
double kld_reverse(const EncodingModel& model, double v, double v0);

/// I(v) = beta<tau> (c^2 + 2v^2) / ((c^2 - v^2)^2 sqrt(1 - v^2/c^2)).
double fisher_paper(double beta_tau, double v, double c);

// Central second difference (f(v+h) - 2 f(v) + f(v-h)) / h^2 of a KLD curve.
// When v < h the stencil is shifted right to center h so it stays in [0, c).
double fisher_finite_difference(const std::function<double(double)>& curve, double v, double h);

/// Cramer-Rao lower bound 1/I on the variance of an unbiased estimator.
double cramer_rao_bound(double fisher);

} // namespace relcode
