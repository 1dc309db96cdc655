#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "ddelab/logistic.hpp"

using namespace ddelab;

TEST_CASE("parameter types enforce positivity") {
    CHECK_THROWS_AS(DelayLogisticParams(0.0), NonPositiveError);
    CHECK_THROWS_AS(DelayLogisticParams(-1.57), NonPositiveError);
    CHECK_THROWS_AS(PhysicalParams(0.0, 14.0), NonPositiveError);
    CHECK_THROWS_AS(PhysicalParams(0.12, -14.0), NonPositiveError);
}

TEST_CASE("canonical parameter is growth rate times delay") {
    const DelayLogisticParams p = canonical_params(PhysicalParams(0.12, 14.0));
    CHECK(p.a == 0.12 * 14.0);
}

TEST_CASE("initial function phi starts at beta and obeys its domain") {
    CHECK(phi(0.0, 1.57, 0.785) == 0.785);
    CHECK(phi(1.0, 1.57, 0.785) == Catch::Approx(0.785 * std::exp(0.785)).epsilon(1e-15));
    CHECK_THROWS_AS(phi(-0.01, 1.57, 0.785), DomainViolationError);
    CHECK_THROWS_AS(phi(1.01, 1.57, 0.785), DomainViolationError);
    CHECK_THROWS_AS(phi(0.5, 1.57, 0.0), NonPositiveError);
    CHECK_THROWS_AS(phi(0.5, 0.0, 0.785), NonPositiveError);
}

TEST_CASE("the exponential family satisfies the smooth-junction identity") {
    // phi'(1) = [a - phi(0)] phi(1) holds algebraically for every (a, beta);
    // the two sides are even computed with identical operations, so the
    // residual is exactly zero.
    std::mt19937 rng(20260819);
    std::uniform_real_distribution<double> dist(1e-3, 3.0);
    for (int i = 0; i < 1000; ++i) {
        const double a = dist(rng), beta = dist(rng);
        CHECK(junction_residual(phi_history(a, beta), a) == 0.0);
    }
}

TEST_CASE("a history violating the junction identity has nonzero residual") {
    const ConstantHistory flat{0.5};
    // h' = 0 but [a - 0.5] * 0.5 != 0 for a != 0.5.
    CHECK(std::abs(junction_residual(flat, 1.57)) > 0.1);
}

TEST_CASE("right-hand side vanishes at both fixed points exactly") {
    for (double a : {0.35, 1.0, 1.57, 2.0}) {
        CHECK(rhs_canonical(0.0, 0.3, a) == 0.0);
        CHECK(rhs_canonical(a, a, a) == 0.0);
    }
}

TEST_CASE("saturation scaling is the canonical run divided by a") {
    const double a = 1.3, beta = 0.4;
    const Trajectory z = simulate_canonical(a, beta, 1.0 / 64.0, 5.0, StepMethod::ClassicalRK4);
    const Trajectory y = wright_from_canonical(z, a);
    const Trajectory back = canonical_from_wright(y, a);
    for (std::size_t k = 0; k < z.size(); ++k) {
        CHECK(y.value(k) == z.value(k) / a);
        CHECK(std::abs(back.value(k) - z.value(k)) <= 1e-12 * std::abs(z.value(k)));
    }
}

TEST_CASE("integrating the saturation form matches the scaled canonical run") {
    const double a = 1.3, beta = 0.4;
    const Grid g = build_grid(1.0 / 64.0, 1.0, 5.0);
    const Trajectory z =
        integrate(CanonicalLogisticRhs{a}, phi_history(a, beta), g, StepMethod::ForwardEuler);
    const Trajectory y = integrate(WrightRhs{a}, ExponentialHistory{beta / a, a - beta}, g,
                                   StepMethod::ForwardEuler);
    for (std::size_t k = 0; k < z.size(); ++k)
        CHECK(std::abs(y.value(k) - z.value(k) / a) <= 1e-10);
}

TEST_CASE("physical/canonical rescaling round-trips") {
    const double t0 = 14.0;
    const Trajectory unit =
        simulate_canonical(1.68, 0.28, 1.0 / 64.0, 4.0, StepMethod::ClassicalRK4);
    const Trajectory phys = to_physical(unit, t0);
    CHECK(phys.grid().delay == t0);
    CHECK(phys.grid().dt == unit.grid().dt * t0);
    CHECK(phys.grid().node_count == unit.grid().node_count);
    for (std::size_t k = 0; k < unit.size(); ++k)
        CHECK(phys.value(k) == unit.value(k) / t0);

    const Trajectory back = to_canonical(phys, t0);
    CHECK(back.grid().delay == 1.0);
    for (std::size_t k = 0; k < unit.size(); ++k)
        CHECK(std::abs(back.value(k) - unit.value(k)) <= 1e-12 * std::abs(unit.value(k)));
}

TEST_CASE("rescaling rejects trajectories on the wrong grid") {
    const Trajectory unit =
        simulate_canonical(1.68, 0.28, 1.0 / 64.0, 4.0, StepMethod::ForwardEuler);
    CHECK_THROWS_AS(to_canonical(unit, 14.0), DomainViolationError); // delay is 1, not 14
    const Trajectory phys = to_physical(unit, 14.0);
    CHECK_THROWS_AS(to_physical(phys, 14.0), DomainViolationError); // delay is 14, not 1
    CHECK_THROWS_AS(to_physical(unit, 0.0), NonPositiveError);
}
