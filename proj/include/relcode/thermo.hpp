#pragma once

#include <span>
#include <string>

#include "relcode/codebook.hpp"
#include "relcode/errors.hpp"

namespace relcode {

// Which KLD enters F_B: the direct sum over both distributions, the
// closed-form rearrangement, or the simplified (1 - 1/lambda) S^a curve.
enum class KldMode { Exact, ClosedForm, Simplified };

enum class Regime { Feasible, Critical, Infeasible };

const char* to_string(Regime regime);
const char* to_string(KldMode mode);

struct FreeEnergyPoint {
    double v;
    double f_sender;
    double f_receiver;
    double gap;
    Regime regime;
};

/// F_A = P<tau> - (P/beta) S^a; algebraically equal to -(P/beta) ln Z^a.
double free_energy_sender(const EncodingModel& model);

/// H(p, q) = -sum p ln q; satisfies H(p,q) = S(p) + D(p||q).
double cross_entropy(std::span<const double> p, std::span<const double> q);

/// F_B = P<tau> - (P/beta)(S^a + D), with D chosen by kld_mode.
double free_energy_receiver(const EncodingModel& model, double v, double v0, KldMode kld_mode);

/// Delta F = T_info * D_KL.
double free_energy_gap(double t_info, double d_kl);

// Critical speed from the stated zero-crossing condition D(v_crit) = -ln Z^a
// combined with the simplified KLD: gamma_crit = S^a / (S^a + ln Z^a).
// Requires -S^a < ln Z^a < 0; F_B in Simplified mode vanishes at the result.
double critical_velocity_consistent(const EncodingModel& model);

// The final printed formula: v = c sqrt(1 - (bt/(bt + ln Z))^2). Only defined
// for ln Z >= 0, where the square-root argument stays in [0, 1).
double critical_velocity_paper(double beta_tau, double log_z, double c);

/// Uniform-duration approximation: critical_velocity_paper with ln Z = ln n.
double critical_velocity_approx(std::size_t n, double beta_tau, double c);

// Numerical root of F_B(v) = 0 on (v0, c), by grid bracketing + bisection.
// Accepts the left endpoint when F_B(v0) is already within tolerance
// (1e-9 * P<tau>).
double free_energy_zero_crossing(const EncodingModel& model, double v0, KldMode kld_mode);

Regime classify_regime(double f_receiver, double tolerance);

/// All free-energy quantities at one sweep point.
FreeEnergyPoint evaluate_free_energy(const EncodingModel& model, double v, double v0,
                                     KldMode kld_mode);

// Figure-mode counterparts, parameterized by (n, beta<tau>) with an implied
// <tau> = 1 so that P and beta are individually meaningful.
double free_energy_sender_figure(const FigureModel& figure, double power);
double free_energy_receiver_figure(const FigureModel& figure, double power, double v, double c);
double free_energy_zero_crossing_figure(const FigureModel& figure, double power, double c);

} // namespace relcode
