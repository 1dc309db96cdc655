#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "ddelab/econ.hpp"
#include "ddelab/regime.hpp"

using namespace ddelab;

namespace {

InterestScenario base_scenario() {
    InterestScenario s;
    s.ceiling = 0.12;
    s.floor = 0.0;
    s.report_delay = 14.0;
    s.beta = 0.02;
    s.horizon = 140.0;
    s.dt = 1.0 / 64.0;
    return s;
}

} // namespace

TEST_CASE("inflation is the gap between nominal and actual rates") {
    const FisherResult r = fisher_inflation(0.08, 0.05);
    CHECK(r.inflation == 0.08 - 0.05);
    CHECK(r.validity_ratio ==
          Catch::Approx((0.05 + r.inflation) / (0.05 * r.inflation)).epsilon(1e-15));
}

TEST_CASE("the linear reading degrades as rates grow") {
    // At small rates the discarded cross term is hundreds of times smaller
    // than the terms kept; at hyperinflation levels the ratio collapses.
    const double small = fisher_inflation(0.08, 0.05).validity_ratio;
    const double large = fisher_inflation(3.0, 1.0).validity_ratio;
    CHECK(small > 50.0);
    CHECK(large < 3.0);
}

TEST_CASE("degenerate rate pairs report an infinite validity ratio") {
    CHECK(std::isinf(fisher_inflation(0.05, 0.05).validity_ratio)); // zero inflation
    CHECK(std::isinf(fisher_inflation(0.08, 0.0).validity_ratio)); // zero actual rate
}

TEST_CASE("psi starts at beta and guards its arguments") {
    CHECK(psi(0.0, 0.12, 0.02, 0.02) == 0.02);
    CHECK(psi(14.0, 0.12, 0.0, 0.02) ==
          Catch::Approx(0.02 * std::exp((0.12 - 0.02) * 14.0)).epsilon(1e-15));
    CHECK_THROWS_AS(psi(-1.0, 0.12, 0.0, 0.02), DomainViolationError);
    CHECK_THROWS_AS(psi(1.0, 0.12, 0.0, 0.0), NonPositiveError);
}

TEST_CASE("scenario validation names the offending field") {
    InterestScenario s = base_scenario();
    s.ceiling = 0.0;
    CHECK_THROWS_WITH(s.validate(), Catch::Matchers::ContainsSubstring("ceiling"));
    s = base_scenario();
    s.floor = -0.01;
    CHECK_THROWS_WITH(s.validate(), Catch::Matchers::ContainsSubstring("floor"));
    s = base_scenario();
    s.floor = 0.12; // floor must stay below the ceiling
    CHECK_THROWS_AS(s.validate(), ScenarioInvalidError);
    s = base_scenario();
    s.report_delay = 0.0;
    CHECK_THROWS_WITH(s.validate(), Catch::Matchers::ContainsSubstring("delay"));
    s = base_scenario();
    s.beta = 0.0;
    CHECK_THROWS_WITH(s.validate(), Catch::Matchers::ContainsSubstring("beta"));
    s = base_scenario();
    s.horizon = 10.0; // shorter than the 14-month delay
    CHECK_THROWS_AS(s.validate(), ScenarioInvalidError);
    CHECK_NOTHROW(base_scenario().validate());
}

TEST_CASE("simulated inflation satisfies the accounting identity exactly") {
    const EconTrajectory econ = simulate_scenario(base_scenario());
    REQUIRE(econ.size() == econ.grid.node_count);
    for (std::size_t k = 0; k < econ.size(); ++k)
        CHECK(econ.inflation[k] + econ.long_rate[k] == 0.12);
}

TEST_CASE("a stable scenario settles at the ceiling") {
    InterestScenario s = base_scenario();
    s.report_delay = 2.0; // (A - w) t0 = 0.24 <= 1/e
    s.horizon = 150.0;
    const EconTrajectory econ = simulate_scenario(s);
    CHECK(std::abs(econ.long_rate.back() - 0.12) < 1e-8);
    CHECK(std::abs(econ.inflation.back()) < 1e-8);
}

TEST_CASE("shifting away the floor is an exact identity at w = 0") {
    CHECK(shift_equivalence_check(base_scenario()) == 0.0);
}

TEST_CASE("shifting away the floor holds to rounding for w > 0") {
    InterestScenario s = base_scenario();
    s.floor = 0.02;
    s.dt = 1.0 / 512.0;
    CHECK(shift_equivalence_check(s) <= 1e-12);
}

TEST_CASE("policy screen compares (A - w) t0 against the non-oscillation bound") {
    const PolicyResult risky = policy_check(0.12, 0.0, 14.0);
    CHECK(risky.verdict == PolicyVerdict::OscillationRisk);
    CHECK(risky.product == Catch::Approx(1.68).epsilon(1e-15));

    const PolicyResult calm = policy_check(0.12, 0.1, 14.0);
    CHECK(calm.verdict == PolicyVerdict::StableOrderly);

    // The bound itself is inclusive.
    const PolicyResult edge = policy_check(asymptotic_bound, 0.0, 1.0);
    CHECK(edge.verdict == PolicyVerdict::StableOrderly);
    CHECK(policy_check(std::nextafter(asymptotic_bound, 1.0), 0.0, 1.0).verdict ==
          PolicyVerdict::OscillationRisk);
}

TEST_CASE("policy screen admits a subsidised (negative) floor") {
    const PolicyResult r = policy_check(0.02, -0.08, 5.0);
    CHECK(r.product == Catch::Approx(0.5).epsilon(1e-15));
    CHECK(r.verdict == PolicyVerdict::OscillationRisk);
}

TEST_CASE("policy screen rejects impossible configurations") {
    CHECK_THROWS_AS(policy_check(0.0, 0.0, 14.0), ScenarioInvalidError);
    CHECK_THROWS_AS(policy_check(0.12, 0.0, 0.0), ScenarioInvalidError);
    CHECK_THROWS_AS(policy_check(0.12, 0.12, 14.0), ScenarioInvalidError);
    CHECK_THROWS_AS(policy_check(0.12, 0.2, 14.0), ScenarioInvalidError);
}

TEST_CASE("the shifted scenario inherits the logistic regime structure") {
    // (A - w) t0 = 1.68 puts the 14-month scenario in the limit-cycle band
    // of the canonical parameter; verify the long rate indeed keeps crossing
    // its ceiling late into the run.
    InterestScenario s = base_scenario();
    s.dt = 1.0 / 64.0;
    s.horizon = 1400.0;
    const EconTrajectory econ = simulate_scenario(s);
    int late_crossings = 0;
    for (std::size_t k = 1; k < econ.size(); ++k) {
        if (econ.time(k) < 700.0) continue;
        const double u0 = econ.long_rate[k - 1] - 0.12;
        const double u1 = econ.long_rate[k] - 0.12;
        if (u0 != 0.0 && u1 != 0.0 && (u0 > 0.0) != (u1 > 0.0)) ++late_crossings;
    }
    CHECK(late_crossings >= 10);
}
