#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "relcode/codebook.hpp"

using namespace relcode;

TEST_CASE("codebook validation") {
    CHECK_THROWS_AS(Codebook({}), InvalidParameter);
    CHECK_THROWS_AS(Codebook({1.0, 0.0}), InvalidParameter);
    CHECK_THROWS_AS(Codebook({-1.0}), InvalidParameter);
    CHECK_THROWS_AS(Codebook({1.0, std::numeric_limits<double>::infinity()}), InvalidParameter);
    CHECK(Codebook({2.0}).size() == 1);
}

TEST_CASE("partition function") {
    Codebook cb({1.0, 2.0});
    CHECK(partition_function(cb, 0.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(partition_function(cb, std::log(2.0)) == doctest::Approx(0.75).epsilon(1e-14));

    Codebook cb2({1.0, 1.2});
    const double expected = oracle::partition({1.0, 1.2}, 1.0);
    CHECK(partition_function(cb2, 1.0) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(partition_function(cb2, 1.0) == doctest::Approx(0.66907).epsilon(1e-5));

    CHECK_THROWS_AS(partition_function(cb, std::numeric_limits<double>::quiet_NaN()),
                    InvalidParameter);
}

TEST_CASE("partition function stays finite for large exponents") {
    Codebook cb({1.0, 2.0});
    // |beta tau| up to 700 must not overflow or underflow to 0
    CHECK(partition_function(cb, 350.0) > 0.0);
    CHECK(std::isfinite(log_partition_function(cb, 350.0)));
    CHECK(std::isfinite(log_partition_function(cb, -350.0)));
    CHECK(log_partition_function(cb, -350.0) == doctest::Approx(700.0).epsilon(1e-12));
}

TEST_CASE("max entropy distribution") {
    Codebook cb({1.0, 2.0});
    auto p = max_entropy_distribution(cb, 0.0);
    CHECK(p[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(p[1] == doctest::Approx(0.5).epsilon(1e-14));

    Codebook uniform({3.0, 3.0, 3.0});
    for (double beta : {-2.0, 0.0, 5.0}) {
        auto u = max_entropy_distribution(uniform, beta);
        for (double x : u) {
            CHECK(x == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
        }
    }

    auto q = max_entropy_distribution(cb, std::log(3.0));
    CHECK(q[0] == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(q[1] == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("mean duration") {
    Codebook cb13({1.0, 3.0});
    std::vector<double> half{0.5, 0.5};
    CHECK(mean_duration(cb13, half) == doctest::Approx(2.0).epsilon(1e-14));

    Codebook cb12({1.0, 2.0});
    std::vector<double> skew{0.75, 0.25};
    CHECK(mean_duration(cb12, skew) == doctest::Approx(1.25).epsilon(1e-14));

    Codebook single({5.0});
    std::vector<double> one{1.0};
    CHECK(mean_duration(single, one) == doctest::Approx(5.0).epsilon(1e-14));

    CHECK_THROWS_AS(mean_duration(cb12, one), InvalidParameter);
}

TEST_CASE("solve_beta") {
    CHECK(std::abs(solve_beta(Codebook({1.0, 3.0}), 2.0)) < 1e-12);
    CHECK(solve_beta(Codebook({1.0, 2.0}), 1.25) == doctest::Approx(std::log(3.0)).epsilon(1e-12));
    CHECK_THROWS_AS(solve_beta(Codebook({1.0, 2.0}), 2.5), OutOfRange);
    CHECK_THROWS_AS(solve_beta(Codebook({1.0, 2.0}), 1.0), OutOfRange);
    CHECK_THROWS_AS(solve_beta(Codebook({1.0, 1.0}), 1.0), DegenerateConstraint);
}

TEST_CASE("entropy per symbol") {
    std::vector<double> uniform4(4, 0.25);
    CHECK(entropy_per_symbol(uniform4) == doctest::Approx(std::log(4.0)).epsilon(1e-14));

    std::vector<double> point{1.0};
    CHECK(entropy_per_symbol(point) == 0.0);

    const auto p = oracle::boltzmann({1.0, 1.2}, 1.0);
    CHECK(entropy_per_symbol(p) == doctest::Approx(oracle::entropy(p)).epsilon(1e-14));
    CHECK(entropy_per_symbol(p) == doctest::Approx(0.688147).epsilon(1e-4));
}

TEST_CASE("info temperature and transmission energy") {
    CHECK(info_temperature(1.0, 2.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(info_temperature(3.0, 1.0) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK_THROWS_AS(info_temperature(1.0, 0.0), DivisionByZero);

    CHECK(transmission_energy(1.0, 1.0) == doctest::Approx(1.0));
    CHECK(transmission_energy(2.0, 1.25) == doctest::Approx(2.5));
    CHECK_THROWS_AS(transmission_energy(-1.0, 1.0), InvalidParameter);

    // E = T_info * (beta <tau>) when beta != 0
    const double e1 = transmission_energy(1.0, 1.5);
    const double e2 = info_temperature(1.0, 2.0) * (2.0 * 1.5);
    CHECK(e1 == doctest::Approx(e2).epsilon(1e-14));
}

TEST_CASE("log multiplicity") {
    std::vector<std::int64_t> pair{1, 1};
    CHECK(log_multiplicity(pair) == doctest::Approx(std::log(2.0)).epsilon(1e-12));

    std::vector<std::int64_t> two_two{2, 2};
    CHECK(log_multiplicity(two_two) == doctest::Approx(std::log(6.0)).epsilon(1e-12));

    std::vector<std::int64_t> degenerate{7, 0};
    CHECK(log_multiplicity(degenerate) == doctest::Approx(0.0).epsilon(1e-12));

    std::vector<std::int64_t> negative{1, -1};
    CHECK_THROWS_AS(log_multiplicity(negative), InvalidParameter);
}

TEST_CASE("figure model") {
    auto f5 = figure_model(5, 1.0);
    CHECK(f5.entropy == doctest::Approx(1.0 + std::log(5.0)).epsilon(1e-14));
    CHECK(f5.entropy == doctest::Approx(2.60944).epsilon(1e-5));

    CHECK(figure_model(1, 1.0).entropy == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(figure_model(40, 1.0).entropy == doctest::Approx(4.68887).epsilon(1e-5));
    CHECK_THROWS_AS(figure_model(0, 1.0), InvalidParameter);
    CHECK_THROWS_AS(figure_model(5, -1.0), InvalidParameter);
}

TEST_CASE("encoding model derived quantities on random codebooks") {
    std::mt19937 rng(20260823);
    std::uniform_real_distribution<double> beta_dist(-5.0, 5.0);
    for (int trial = 0; trial < 200; ++trial) {
        const auto taus = oracle::random_durations(rng);
        const double beta = beta_dist(rng);
        EncodingModel model(Codebook(taus), beta, 1.0, 1.0);

        double sum = 0.0;
        for (double p : model.distribution()) {
            CHECK(p > 0.0);
            CHECK(p <= 1.0);
            sum += p;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));

        // identity S = beta <tau> + ln Z against the direct-sum oracle
        const double s_direct = oracle::entropy(oracle::boltzmann(taus, beta));
        CHECK(model.entropy() == doctest::Approx(s_direct).epsilon(1e-12));
    }
}

TEST_CASE("solve_beta round-trips the mean and the mean decreases in beta") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto taus = oracle::random_durations(rng);
        Codebook cb(taus);
        std::uniform_real_distribution<double> frac(0.05, 0.95);
        const double target =
            cb.min_duration() + frac(rng) * (cb.max_duration() - cb.min_duration());
        const double beta = solve_beta(cb, target);
        const double mean = mean_duration(cb, max_entropy_distribution(cb, beta));
        CHECK(mean == doctest::Approx(target).epsilon(1e-10));

        double prev = oracle::mean(taus, oracle::boltzmann(taus, -5.0));
        for (double b = -4.0; b <= 5.0; b += 1.0) {
            const double m = mean_duration(cb, max_entropy_distribution(cb, b));
            CHECK(m < prev);
            prev = m;
        }
    }
}

TEST_CASE("log multiplicity per symbol converges to entropy (Stirling)") {
    std::vector<double> errors;
    for (std::int64_t n : {10, 100, 1000}) {
        std::vector<std::int64_t> counts{n / 2, n / 2};
        const double rate = log_multiplicity(counts) / static_cast<double>(n);
        errors.push_back(std::abs(rate - std::log(2.0)));
    }
    CHECK(errors[1] < errors[0]);
    CHECK(errors[2] < errors[1]);
}

TEST_CASE("entropy is maximal at beta = 0") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const auto taus = oracle::random_durations(rng);
        Codebook cb(taus);
        const double s0 = entropy_per_symbol(max_entropy_distribution(cb, 0.0));
        for (double beta : {-3.0, -0.5, 0.7, 2.0}) {
            CHECK(entropy_per_symbol(max_entropy_distribution(cb, beta)) <= s0 + 1e-12);
        }
    }
}
