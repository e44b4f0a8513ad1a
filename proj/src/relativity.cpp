#include "relcode/relativity.hpp"

#include <cmath>
#include <string>

namespace relcode {

namespace {

void check_speed(double v, double c) {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw InvalidParameter("light speed must be positive and finite");
    }
    if (!(v >= 0.0) || !(v < c)) {
        throw OutOfDomain("speed " + std::to_string(v) + " outside [0, c) with c = " +
                          std::to_string(c));
    }
}

double ensure_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        throw NumericOverflow(std::string(what) + " overflowed");
    }
    return x;
}

} // namespace

double lorentz_gamma(double v, double c) {
    check_speed(v, c);
    const double u = v / c;
    return ensure_finite(1.0 / std::sqrt(1.0 - u * u), "lorentz_gamma");
}

double gamma_first_derivative(double v, double c) {
    check_speed(v, c);
    const double u = v / c;
    const double w = 1.0 - u * u;
    return ensure_finite((v / (c * c)) * std::pow(w, -1.5), "gamma_first_derivative");
}

double gamma_second_derivative(double v, double c) {
    check_speed(v, c);
    const double u = v / c;
    const double c2 = c * c;
    const double v2 = v * v;
    const double denom = (c2 - v2) * (c2 - v2) * std::sqrt(1.0 - u * u);
    return ensure_finite((c2 + 2.0 * v2) / denom, "gamma_second_derivative");
}

double dilation_ratio(double v, double v0, double c) {
    if (v == v0) {
        check_speed(v, c);
        return 1.0;
    }
    return ensure_finite(lorentz_gamma(v, c) / lorentz_gamma(v0, c), "dilation_ratio");
}

Codebook receiver_durations(const Codebook& codebook, double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw InvalidParameter("duration scale factor must be positive and finite");
    }
    std::vector<double> scaled = codebook.durations();
    for (double& tau : scaled) {
        tau *= lambda;
    }
    return Codebook(std::move(scaled));
}

std::vector<double> receiver_distribution(const Codebook& codebook, double beta, double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw InvalidParameter("duration scale factor must be positive and finite");
    }
    return max_entropy_distribution(codebook, beta * lambda);
}

} // namespace relcode
