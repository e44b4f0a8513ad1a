#include "relcode/audit.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "relcode/infogeo.hpp"
#include "relcode/relativity.hpp"
#include "relcode/thermo.hpp"

namespace relcode {

namespace {

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

} // namespace

std::vector<AuditCheck> run_audit(const EncodingModel& model, const FigureModel& figure,
                                  double power) {
    std::vector<AuditCheck> checks;
    const double c = model.light_speed();

    // A1: the relation beta = S / <tau> holds only when ln Z = 0
    {
        const double implied_beta = model.entropy() / model.mean_duration();
        const double residual = std::abs(implied_beta - model.beta());
        checks.push_back({"A1", residual < 1e-12, "beta_residual=" + num(residual)});
    }

    // R1: tau/gamma vs gamma*tau scaling conventions differ by gamma^2
    {
        const double gamma = lorentz_gamma(0.6 * c, c);
        checks.push_back({"R1", false, "convention_ratio_gamma^2=" + num(gamma * gamma)});
    }

    // K1: closed-form KLD vs direct summation over a v grid
    {
        double max_residual = 0.0;
        for (double v : {0.1, 0.3, 0.5, 0.7, 0.86603, 0.95}) {
            const double closed = kld_closed_form(model, v * c, 0.0).value;
            const double lambda = dilation_ratio(v * c, 0.0, c);
            const auto p_b = receiver_distribution(model.codebook(), model.beta(), lambda);
            const double direct = kld(p_b, model.distribution());
            const double scale = std::max(std::abs(direct), 1.0);
            max_residual = std::max(max_residual, std::abs(closed - direct) / scale);
        }
        checks.push_back({"K1", max_residual < 1e-12, "max_residual=" + num(max_residual)});
    }

    // K2: KLD asymmetry |D(a||b) - D(b||a)| at lambda = 2 (v = sqrt(3)/2 c)
    {
        const double v = std::sqrt(3.0) / 2.0 * c;
        const double forward = kld_closed_form(model, v, 0.0).value;
        const double reverse = kld_reverse(model, v, 0.0);
        checks.push_back({"K2", false, "asymmetry=" + num(std::abs(forward - reverse))});
    }

    // F1: fisher_paper vs finite-difference curvature of the simplified KLD
    {
        // curve uses S = beta*tau, the same truncation the paper's formula makes
        auto curve = [&](double v) { return kld_simplified(figure.beta_tau, v, c); };
        const double h = 1e-4 * c;
        std::string ratios;
        bool pass_at_zero = false;
        for (double v : {0.0, 0.3, 0.6, 0.9}) {
            const double paper = fisher_paper(figure.beta_tau, v * c, c);
            const double fd = fisher_finite_difference(curve, v * c, h);
            const double ratio = paper / fd;
            if (v == 0.0) {
                pass_at_zero = std::abs(ratio - 1.0) < 1e-3;
            }
            if (!ratios.empty()) {
                ratios += ",";
            }
            ratios += num(ratio);
        }
        checks.push_back({"F1", pass_at_zero, "paper_over_fd=" + ratios});
    }

    // T1: sign of F_A in figure mode
    {
        const double f_a = free_energy_sender_figure(figure, power);
        checks.push_back({"T1", f_a >= 0.0, "F_A=" + num(f_a)});
    }

    // T2: direction of critical_velocity_approx in n
    {
        bool increasing = true;
        double prev = critical_velocity_approx(5, figure.beta_tau, c);
        for (std::size_t n : {10, 20, 40}) {
            const double vc = critical_velocity_approx(n, figure.beta_tau, c);
            increasing = increasing && (vc > prev);
            prev = vc;
        }
        checks.push_back({"T2", false, increasing ? "increasing" : "decreasing"});
    }

    // T3: existence of an F_B zero crossing in figure mode
    {
        try {
            const double v = free_energy_zero_crossing_figure(figure, power, c);
            checks.push_back({"T3", true, "crossing_at=" + num(v)});
        } catch (const NoCrossing&) {
            checks.push_back({"T3", false, "NoCrossing"});
        }
    }

    return checks;
}

std::string format_audit_line(const AuditCheck& check) {
    return "CHECK " + check.id + " " + (check.pass ? "PASS" : "FINDING") + " " + check.value;
}

} // namespace relcode
