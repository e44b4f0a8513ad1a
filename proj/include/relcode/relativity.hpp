#pragma once

#include <vector>

#include "relcode/codebook.hpp"
#include "relcode/errors.hpp"

namespace relcode {

/// gamma(v) = (1 - v^2/c^2)^(-1/2), valid for 0 <= v < c.
double lorentz_gamma(double v, double c);

/// d gamma / dv = (v/c^2) (1 - v^2/c^2)^(-3/2).
double gamma_first_derivative(double v, double c);

/// d^2 gamma / dv^2 = (c^2 + 2 v^2) / ((c^2 - v^2)^2 sqrt(1 - v^2/c^2)).
double gamma_second_derivative(double v, double c);

// Net factor by which the receiver's interpreted durations differ from the
// sender's: lambda = gamma(v) / gamma(v0). Equals gamma(v) when the receiver
// assumes the sender is at rest (v0 = 0).
double dilation_ratio(double v, double v0, double c);

/// Codebook with every duration scaled by lambda.
Codebook receiver_durations(const Codebook& codebook, double lambda);

/// p_j^(b) = exp(-beta lambda tau_j) / Z^(b); the sender distribution at lambda = 1.
std::vector<double> receiver_distribution(const Codebook& codebook, double beta, double lambda);

// True sender speed v, assumed speed v0, and the derived duration scale
// factor lambda = gamma(v)/gamma(v0).
struct FrameContext {
    double v;
    double v0;
    double c;
    double lambda;

    FrameContext(double v_, double v0_, double c_)
        : v(v_), v0(v0_), c(c_), lambda(dilation_ratio(v_, v0_, c_)) {}
};

} // namespace relcode
