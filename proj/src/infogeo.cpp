#include "relcode/infogeo.hpp"

#include <cmath>

#include "relcode/relativity.hpp"

namespace relcode {

double kld(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw InvalidParameter("distributions must have equal length");
    }
    double d = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j] > 0.0) {
            if (!(q[j] > 0.0)) {
                throw SupportMismatch("q is zero where p has mass");
            }
            d += p[j] * std::log(p[j] / q[j]);
        }
    }
    return std::max(d, 0.0);
}

KldBreakdown kld_closed_form(const EncodingModel& model, double v, double v0) {
    const double c = model.light_speed();
    const double lambda = dilation_ratio(v, v0, c);
    const double beta = model.beta();

    const auto p_receiver = receiver_distribution(model.codebook(), beta, lambda);
    const double mean_tau_b = mean_duration(model.codebook(), p_receiver);
    const double log_z_b = log_partition_function(model.codebook(), beta * lambda);
    const double log_ratio = model.log_partition() - log_z_b;

    KldBreakdown out;
    out.mean_tau_receiver = mean_tau_b;
    out.log_partition_ratio = log_ratio;
    out.value = beta * (1.0 - lambda) * mean_tau_b + log_ratio;
    if (!std::isfinite(out.value)) {
        throw NumericOverflow("closed-form KLD overflowed");
    }
    if (out.value < 0.0) {
        out.value = 0.0; // rounding guard; the true value is >= 0
    }
    return out;
}

double kld_simplified(double entropy_sender, double v, double c) {
    if (!(entropy_sender >= 0.0)) {
        throw InvalidParameter("sender entropy must be nonnegative");
    }
    const double gamma = lorentz_gamma(v, c);
    return (1.0 - 1.0 / gamma) * entropy_sender;
}

double kld_reverse(const EncodingModel& model, double v, double v0) {
    const double lambda = dilation_ratio(v, v0, model.light_speed());
    const auto p_receiver = receiver_distribution(model.codebook(), model.beta(), lambda);
    return kld(model.distribution(), p_receiver);
}

double fisher_paper(double beta_tau, double v, double c) {
    if (!(beta_tau > 0.0) || !std::isfinite(beta_tau)) {
        throw InvalidParameter("beta_tau must be positive and finite");
    }
    const double value = beta_tau * gamma_second_derivative(v, c);
    if (!std::isfinite(value)) {
        throw NumericOverflow("fisher_paper overflowed");
    }
    return value;
}

double fisher_finite_difference(const std::function<double(double)>& curve, double v, double h) {
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw InvalidParameter("step must be positive and finite");
    }
    double center = v;
    if (center - h < 0.0) {
        if (v < 0.0) {
            throw OutOfDomain("stencil leaves [0, c)");
        }
        center = h; // forward-shifted stencil near v = 0
    }
    const double f_minus = curve(center - h);
    const double f_zero = curve(center);
    const double f_plus = curve(center + h);
    return (f_plus - 2.0 * f_zero + f_minus) / (h * h);
}

double cramer_rao_bound(double fisher) {
    if (!(fisher > 0.0)) {
        throw InvalidParameter("Fisher information must be positive");
    }
    return 1.0 / fisher;
}

} // namespace relcode
