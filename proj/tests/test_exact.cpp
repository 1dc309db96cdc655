#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "ddelab/exact.hpp"
#include "reference_data.hpp"

using namespace ddelab;

TEST_CASE("closed form matches the reference actual column") {
    for (std::size_t i = 0; i < refdata::times.size(); ++i)
        CHECK(std::abs(exact_value(refdata::times[i], refdata::a) - refdata::exact[i]) <= 1e-9);
}

TEST_CASE("the three pieces join continuously for arbitrary a") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(1e-3, 3.0);
    for (int i = 0; i < 100; ++i) {
        const double a = dist(rng);
        const double j1 = detail::exact_piece1(1.0, a) - detail::exact_piece2(1.0, a);
        const double j2 = detail::exact_piece2(2.0, a) - detail::exact_piece3(2.0, a);
        CHECK(std::abs(j1) <= 1e-12 * detail::exact_piece1(1.0, a));
        CHECK(std::abs(j2) <= 1e-12 * detail::exact_piece2(2.0, a));
    }
}

TEST_CASE("closed form satisfies the delay equation pointwise") {
    // Central-difference derivative against a z(t) - z(t) z(t-1), sampled
    // away from the junction knots where the higher derivatives jump.
    const double h = 1e-6;
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> adist(0.2, 2.5);
    std::uniform_real_distribution<double> tdist(1.1, 2.9);
    for (int i = 0; i < 200; ++i) {
        const double a = adist(rng);
        double t = tdist(rng);
        if (std::abs(t - 2.0) < 0.05) t += 0.1; // keep the stencil off the knot
        const double dz = (exact_value(t + h, a) - exact_value(t - h, a)) / (2.0 * h);
        const double rhs = a * exact_value(t, a) - exact_value(t, a) * exact_value(t - 1.0, a);
        CHECK(std::abs(dz - rhs) <= 1e-5 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("exact_value guards its domain") {
    CHECK_THROWS_AS(exact_value(-0.1, 1.57), DomainViolationError);
    CHECK_THROWS_AS(exact_value(3.1, 1.57), DomainViolationError);
    CHECK_THROWS_AS(exact_value(1.0, 0.0), NonPositiveError);
    CHECK_NOTHROW(exact_value(0.0, 1.57));
    CHECK_NOTHROW(exact_value(3.0, 1.57));
}

TEST_CASE("error_table tabulates exact minus simulated at grid times") {
    const ErrorTable table = error_table(StepMethod::Rk4HeldDelay, 1.0 / 512.0, refdata::a);
    REQUIRE(table.rows.size() == refdata::times.size());
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        CHECK(table.rows[i].time == refdata::times[i]);
        CHECK(std::abs(table.rows[i].z_actual - refdata::exact[i]) <= 1e-9);
        CHECK(std::abs(table.rows[i].z_simulated - refdata::sim_512[i]) <= 5e-9);
        CHECK(std::abs(table.rows[i].delta() - refdata::delta_512[i]) <= 5e-9);
    }
}

TEST_CASE("error_table rejects off-grid and out-of-range sample times") {
    const std::vector<double> off{0.1}; // not a multiple of 1/512 ... 0.1*512 = 51.2
    CHECK_THROWS_AS(error_table(StepMethod::ForwardEuler, 1.0 / 512.0, 1.57, off),
                    DomainViolationError);
    const std::vector<double> outside{3.25};
    CHECK_THROWS_AS(error_table(StepMethod::ForwardEuler, 1.0 / 512.0, 1.57, outside),
                    DomainViolationError);
}
