#include "relcode/thermo.hpp"

#include <cmath>
#include <functional>

#include "relcode/infogeo.hpp"
#include "relcode/relativity.hpp"

namespace relcode {

const char* to_string(Regime regime) {
    switch (regime) {
        case Regime::Feasible: return "Feasible";
        case Regime::Critical: return "Critical";
        case Regime::Infeasible: return "Infeasible";
    }
    return "?";
}

const char* to_string(KldMode mode) {
    switch (mode) {
        case KldMode::Exact: return "Exact";
        case KldMode::ClosedForm: return "ClosedForm";
        case KldMode::Simplified: return "Simplified";
    }
    return "?";
}

double free_energy_sender(const EncodingModel& model) {
    if (model.beta() == 0.0) {
        throw DivisionByZero("free energy undefined at beta = 0");
    }
    return model.power() * model.mean_duration() -
           (model.power() / model.beta()) * model.entropy();
}

double cross_entropy(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw InvalidParameter("distributions must have equal length");
    }
    double h = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j] > 0.0) {
            if (!(q[j] > 0.0)) {
                throw SupportMismatch("q is zero where p has mass");
            }
            h -= p[j] * std::log(q[j]);
        }
    }
    return h;
}

namespace {

double kld_for_mode(const EncodingModel& model, double v, double v0, KldMode mode) {
    switch (mode) {
        case KldMode::Exact: {
            const double lambda = dilation_ratio(v, v0, model.light_speed());
            const auto p_receiver = receiver_distribution(model.codebook(), model.beta(), lambda);
            return kld(p_receiver, model.distribution());
        }
        case KldMode::ClosedForm:
            return kld_closed_form(model, v, v0).value;
        case KldMode::Simplified: {
            const double lambda = dilation_ratio(v, v0, model.light_speed());
            return (1.0 - 1.0 / lambda) * model.entropy();
        }
    }
    throw InvalidParameter("unknown KLD mode");
}

// Bracketing + bisection root of f on [v_lo, v_hi]; accepts any point with
// |f| <= tol. Overflow while scanning truncates the searchable range.
double zero_crossing(const std::function<double(double)>& f, double v_lo, double v_hi,
                     double tol) {
    double f_lo = f(v_lo);
    if (std::abs(f_lo) <= tol) {
        return v_lo;
    }

    constexpr int kGridPoints = 4096;
    double a = v_lo;
    double fa = f_lo;
    double b = v_lo;
    bool bracketed = false;
    for (int i = 1; i <= kGridPoints; ++i) {
        const double v = v_lo + (v_hi - v_lo) * static_cast<double>(i) / kGridPoints;
        double fv;
        try {
            fv = f(v);
        } catch (const NumericOverflow&) {
            break;
        }
        if (std::abs(fv) <= tol) {
            return v;
        }
        if (std::signbit(fv) != std::signbit(fa)) {
            b = v;
            bracketed = true;
            break;
        }
        a = v;
        fa = fv;
    }
    if (!bracketed) {
        throw NoCrossing("free energy does not change sign on the interval");
    }

    for (int iter = 0; iter < 200; ++iter) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (std::abs(fm) <= tol) {
            return m;
        }
        if (std::signbit(fm) == std::signbit(fa)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

} // namespace

double free_energy_receiver(const EncodingModel& model, double v, double v0, KldMode kld_mode) {
    if (model.beta() == 0.0) {
        throw DivisionByZero("free energy undefined at beta = 0");
    }
    if (v == v0) {
        dilation_ratio(v, v0, model.light_speed()); // domain check only
        return free_energy_sender(model);
    }
    const double d = kld_for_mode(model, v, v0, kld_mode);
    return model.power() * model.mean_duration() -
           (model.power() / model.beta()) * (model.entropy() + d);
}

double free_energy_gap(double t_info, double d_kl) {
    if (!(d_kl >= 0.0)) {
        throw InvalidParameter("KLD must be nonnegative");
    }
    return t_info * d_kl;
}

double critical_velocity_consistent(const EncodingModel& model) {
    const double s = model.entropy();
    const double log_z = model.log_partition();
    if (log_z >= 0.0) {
        throw NoCriticalVelocity("ln Z >= 0: F_B never crosses zero from above");
    }
    if (log_z <= -s) {
        throw UnreachableThreshold("required KLD exceeds its supremum S^(a)");
    }
    const double gamma_crit = s / (s + log_z);
    const double c = model.light_speed();
    return c * std::sqrt(1.0 - 1.0 / (gamma_crit * gamma_crit));
}

double critical_velocity_paper(double beta_tau, double log_z, double c) {
    if (!(beta_tau > 0.0) || !std::isfinite(beta_tau)) {
        throw InvalidParameter("beta_tau must be positive and finite");
    }
    const double denom = beta_tau + log_z;
    const double ratio = beta_tau / denom;
    const double arg = 1.0 - ratio * ratio;
    if (!(denom > 0.0) || !(arg >= 0.0) || !(arg < 1.0)) {
        throw OutOfDomain("square-root argument outside [0, 1)");
    }
    return c * std::sqrt(arg);
}

double critical_velocity_approx(std::size_t n, double beta_tau, double c) {
    if (n < 1) {
        throw InvalidParameter("codebook size must be >= 1");
    }
    return critical_velocity_paper(beta_tau, std::log(static_cast<double>(n)), c);
}

double free_energy_zero_crossing(const EncodingModel& model, double v0, KldMode kld_mode) {
    const double c = model.light_speed();
    dilation_ratio(v0, v0, c); // domain check
    const double tol = 1e-9 * model.power() * model.mean_duration();
    const double v_hi = c * (1.0 - 1e-12);
    auto f = [&](double v) { return free_energy_receiver(model, v, v0, kld_mode); };
    return zero_crossing(f, v0, v_hi, tol);
}

Regime classify_regime(double f_receiver, double tolerance) {
    if (!(tolerance > 0.0)) {
        throw InvalidParameter("tolerance must be positive");
    }
    if (std::abs(f_receiver) <= tolerance) {
        return Regime::Critical;
    }
    return f_receiver > 0.0 ? Regime::Feasible : Regime::Infeasible;
}

FreeEnergyPoint evaluate_free_energy(const EncodingModel& model, double v, double v0,
                                     KldMode kld_mode) {
    FreeEnergyPoint point;
    point.v = v;
    point.f_sender = free_energy_sender(model);
    point.f_receiver = free_energy_receiver(model, v, v0, kld_mode);
    point.gap = point.f_sender - point.f_receiver;
    point.regime = classify_regime(point.f_receiver,
                                   1e-9 * model.power() * model.mean_duration());
    return point;
}

double free_energy_sender_figure(const FigureModel& figure, double power) {
    if (!(power > 0.0)) {
        throw InvalidParameter("power must be positive");
    }
    // figure mode fixes <tau> = 1, so beta = beta_tau
    return power * (1.0 - figure.entropy / figure.beta_tau);
}

double free_energy_receiver_figure(const FigureModel& figure, double power, double v, double c) {
    if (!(power > 0.0)) {
        throw InvalidParameter("power must be positive");
    }
    const double d = kld_simplified(figure.entropy, v, c);
    return power * (1.0 - (figure.entropy + d) / figure.beta_tau);
}

double free_energy_zero_crossing_figure(const FigureModel& figure, double power, double c) {
    const double tol = 1e-9 * power;
    auto f = [&](double v) { return free_energy_receiver_figure(figure, power, v, c); };
    return zero_crossing(f, 0.0, c * (1.0 - 1e-12), tol);
}

} // namespace relcode
