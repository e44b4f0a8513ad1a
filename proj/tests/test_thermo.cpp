#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "relcode/infogeo.hpp"
#include "relcode/relativity.hpp"
#include "relcode/thermo.hpp"

using namespace relcode;

namespace {

EncodingModel narrow_model() {
    return EncodingModel(Codebook({1.0, 1.2}), 1.0, 1.0, 1.0);
}

// durations {ln 2, ln 2} give Z = 1 at beta = 1
EncodingModel unit_partition_model() {
    return EncodingModel(Codebook({std::log(2.0), std::log(2.0)}), 1.0, 1.0, 1.0);
}

} // namespace

TEST_CASE("free energy of the sender") {
    CHECK(free_energy_sender(unit_partition_model()) == doctest::Approx(0.0).epsilon(1e-14));

    const auto model = narrow_model();
    const double ln_z = std::log(oracle::partition({1.0, 1.2}, 1.0));
    CHECK(free_energy_sender(model) == doctest::Approx(-ln_z).epsilon(1e-12));
    CHECK(free_energy_sender(model) == doctest::Approx(0.40190).epsilon(1e-4));

    const auto figure = figure_model(5, 1.0);
    CHECK(free_energy_sender_figure(figure, 1.0) ==
          doctest::Approx(1.0 - 2.60944).epsilon(1e-4));
    CHECK(free_energy_sender_figure(figure, 1.0) < 0.0);

    EncodingModel flat(Codebook({1.0, 2.0}), 0.0, 1.0, 1.0);
    CHECK_THROWS_AS(free_energy_sender(flat), DivisionByZero);
}

TEST_CASE("free energy identity F_A = -(P/beta) ln Z on random models") {
    std::mt19937 rng(55);
    std::uniform_real_distribution<double> beta_dist(0.2, 3.0);
    std::uniform_real_distribution<double> power_dist(0.5, 4.0);
    for (int trial = 0; trial < 100; ++trial) {
        const auto taus = oracle::random_durations(rng);
        const double beta = beta_dist(rng);
        const double power = power_dist(rng);
        EncodingModel model(Codebook(taus), beta, power, 1.0);
        const double by_definition = free_energy_sender(model);
        const double by_partition = -(power / beta) * model.log_partition();
        CHECK(by_definition == doctest::Approx(by_partition).epsilon(1e-12));
    }
}

TEST_CASE("cross entropy") {
    std::vector<double> p{0.3, 0.7};
    CHECK(cross_entropy(p, p) == doctest::Approx(entropy_per_symbol(p)).epsilon(1e-14));

    const auto sender = oracle::boltzmann({1.0, 2.0}, 1.0);
    const auto receiver = oracle::boltzmann({1.0, 2.0}, 2.0);
    const double h = cross_entropy(sender, receiver);
    CHECK(h == doctest::Approx(0.66473).epsilon(1e-4));
    // decomposition H(p, q) = S(p) + D(p || q)
    CHECK(h == doctest::Approx(entropy_per_symbol(sender) + kld(sender, receiver))
                   .epsilon(1e-12));

    std::vector<double> point{1.0, 0.0};
    std::vector<double> half{0.5, 0.5};
    CHECK(cross_entropy(point, half) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    std::vector<double> zeroed{0.0, 1.0};
    CHECK_THROWS_AS(cross_entropy(half, point), SupportMismatch);
}

TEST_CASE("free energy of the receiver") {
    const auto model = narrow_model();
    for (KldMode mode : {KldMode::Exact, KldMode::ClosedForm, KldMode::Simplified}) {
        CHECK(free_energy_receiver(model, 0.42, 0.42, mode) == free_energy_sender(model));
    }

    // the consistent critical velocity zeroes F_B in Simplified mode
    CHECK(free_energy_receiver(model, critical_velocity_consistent(model), 0.0,
                               KldMode::Simplified) == doctest::Approx(0.0).epsilon(1e-9));

    CHECK(free_energy_receiver_figure(figure_model(5, 1.0), 1.0, 0.0, 1.0) ==
          doctest::Approx(-1.60944).epsilon(1e-4));

    EncodingModel flat(Codebook({1.0, 2.0}), 0.0, 1.0, 1.0);
    CHECK_THROWS_AS(free_energy_receiver(flat, 0.5, 0.0, KldMode::Exact), DivisionByZero);
}

TEST_CASE("free energy gap consistency") {
    const auto model = narrow_model();
    const double t_info = model.info_temperature();
    const double f_a = free_energy_sender(model);
    for (double v : {0.2, 0.6, 0.9}) {
        for (KldMode mode : {KldMode::Exact, KldMode::ClosedForm, KldMode::Simplified}) {
            double d = 0.0;
            switch (mode) {
                case KldMode::Exact: {
                    const double lambda = dilation_ratio(v, 0.0, 1.0);
                    d = kld(receiver_distribution(model.codebook(), model.beta(), lambda),
                            model.distribution());
                    break;
                }
                case KldMode::ClosedForm:
                    d = kld_closed_form(model, v, 0.0).value;
                    break;
                case KldMode::Simplified:
                    d = kld_simplified(model.entropy(), v, 1.0);
                    break;
            }
            const double f_b = free_energy_receiver(model, v, 0.0, mode);
            CHECK(f_a - f_b == doctest::Approx(free_energy_gap(t_info, d)).epsilon(1e-10));
        }
    }

    CHECK(free_energy_gap(123.0, 0.0) == 0.0);
    CHECK(free_energy_gap(1.0, 0.52189) == doctest::Approx(0.52189));
    CHECK(free_energy_gap(0.5, 2.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(free_energy_gap(1.0, -0.1), InvalidParameter);
}

TEST_CASE("F_B decreases in v in Simplified mode") {
    const auto model = narrow_model();
    double prev = free_energy_receiver(model, 0.0, 0.0, KldMode::Simplified);
    for (double v = 0.01; v < 1.0; v += 0.01) {
        const double f = free_energy_receiver(model, v, 0.0, KldMode::Simplified);
        CHECK(f < prev);
        prev = f;
    }
}

TEST_CASE("consistent critical velocity") {
    const auto model = narrow_model();
    const double v_crit = critical_velocity_consistent(model);
    CHECK(v_crit == doctest::Approx(0.909344).epsilon(1e-5));

    // gamma_crit sanity from the same inputs
    const double s = model.entropy();
    const double ln_z = model.log_partition();
    CHECK(s == doctest::Approx(0.68814).epsilon(1e-4));
    CHECK(ln_z == doctest::Approx(-0.40190).epsilon(1e-4));
    CHECK(s / (s + ln_z) == doctest::Approx(2.40358).epsilon(1e-5));

    EncodingModel flat(Codebook({1.0, 2.0}), 0.0, 1.0, 1.0);
    CHECK_THROWS_AS(critical_velocity_consistent(flat), NoCriticalVelocity);

    EncodingModel wide(Codebook({1.0, 2.0}), 1.0, 1.0, 1.0);
    CHECK(wide.log_partition() <= -wide.entropy());
    CHECK_THROWS_AS(critical_velocity_consistent(wide), UnreachableThreshold);
}

TEST_CASE("paper critical velocity") {
    CHECK(critical_velocity_paper(1.0, 0.0, 1.0) == doctest::Approx(0.0));
    CHECK(critical_velocity_paper(1.0, std::log(5.0), 1.0) ==
          doctest::Approx(0.92366).epsilon(1e-5));
    CHECK(critical_velocity_paper(1.0, std::log(40.0), 1.0) ==
          doctest::Approx(0.97699).epsilon(1e-5));
    CHECK_THROWS_AS(critical_velocity_paper(1.0, -0.5, 1.0), OutOfDomain);
    CHECK_THROWS_AS(critical_velocity_paper(1.0, -2.0, 1.0), OutOfDomain);
    CHECK_THROWS_AS(critical_velocity_paper(0.0, 1.0, 1.0), InvalidParameter);
}

TEST_CASE("approximate critical velocity") {
    CHECK(critical_velocity_approx(1, 1.0, 1.0) == doctest::Approx(0.0));
    const std::vector<std::size_t> ns{5, 10, 20, 40};
    const std::vector<double> expected{0.92366, 0.95306, 0.96818, 0.97699};
    double prev = 0.0;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const double vc = critical_velocity_approx(ns[i], 1.0, 1.0);
        CHECK(vc == doctest::Approx(expected[i]).epsilon(1e-5));
        CHECK(vc == critical_velocity_paper(1.0, std::log(static_cast<double>(ns[i])), 1.0));
        CHECK(vc > prev); // increases with n, contrary to the figure caption
        prev = vc;
    }
}

TEST_CASE("free energy zero crossing") {
    const auto model = narrow_model();
    const double numeric = free_energy_zero_crossing(model, 0.0, KldMode::Simplified);
    CHECK(numeric == doctest::Approx(critical_velocity_consistent(model)).epsilon(1e-6));

    CHECK(free_energy_zero_crossing(unit_partition_model(), 0.0, KldMode::Simplified) == 0.0);

    CHECK_THROWS_AS(free_energy_zero_crossing_figure(figure_model(5, 1.0), 1.0, 1.0), NoCrossing);
}

TEST_CASE("regime classification") {
    CHECK(classify_regime(1.0, 1e-9) == Regime::Feasible);
    CHECK(classify_regime(0.0, 1e-9) == Regime::Critical);
    CHECK(classify_regime(-0.5, 1e-9) == Regime::Infeasible);
    CHECK_THROWS_AS(classify_regime(0.0, 0.0), InvalidParameter);

    const auto point = evaluate_free_energy(narrow_model(), 0.3, 0.0, KldMode::Simplified);
    CHECK(point.gap == doctest::Approx(point.f_sender - point.f_receiver).epsilon(1e-12));
    CHECK(point.regime == Regime::Feasible);
}
