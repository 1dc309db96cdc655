#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "errors.hpp"
#include "grid.hpp"
#include "integrate.hpp"
#include "logistic.hpp"
#include "trajectory.hpp"

// Two-rate model of long-term interest and inflation.  The long rate i(t)
// adjusts toward the ceiling A with a reporting delay t0 (months) and a
// floor w (the real component):
//
//     i'(t) = A [i(t) - w] - i(t - t0) [i(t) - w],
//
// inflation is read off as I(t) = A - i(t).  Substituting x = i - w turns
// this into the canonical delay logistic form with rate A - w, which is the
// bridge to every regime result of the logistic module.

namespace ddelab {

// Inflation implied by a nominal/actual interest pair, with the size of the
// cross term relative to what was kept: the linear reading i_n = i_a + I is
// trustworthy while the ratio is large.
struct FisherResult {
    double inflation = 0.0;
    double validity_ratio = 0.0;
};

inline FisherResult fisher_inflation(double i_nominal, double i_actual) {
    FisherResult r;
    r.inflation = i_nominal - i_actual;
    const double denom = i_actual * r.inflation;
    r.validity_ratio = denom == 0.0 ? std::numeric_limits<double>::infinity()
                                    : (i_actual + r.inflation) / denom;
    return r;
}

// Initial path of the shifted rate x = i - w on the history interval:
// psi(t) = beta exp((A - w - beta) t).
inline double psi(double t, double A, double w, double beta) {
    if (!(beta > 0.0)) throw NonPositiveError("beta", beta);
    if (t < 0.0) throw DomainViolationError("psi is defined for t >= 0");
    return beta * std::exp((A - w - beta) * t);
}

inline ExponentialHistory psi_history(double A, double w, double beta) {
    if (!(beta > 0.0)) throw NonPositiveError("beta", beta);
    return ExponentialHistory{beta, A - w - beta};
}

// Right-hand side of the interest equation in its literal (unshifted) form.
struct InterestRhs {
    double A;
    double w;
    double operator()(double /*t*/, double i, double i_delayed) const noexcept {
        return A * (i - w) - i_delayed * (i - w);
    }
};

struct InterestScenario {
    double ceiling = 0.0;     // A, the self-limiting nominal ceiling
    double floor = 0.0;       // w, the real-rate floor (>= 0, < A)
    double report_delay = 0.0; // t0, months between cause and reported effect
    double beta = 0.0;        // initial displacement of i - w above the floor
    double horizon = 0.0;     // months
    double dt = 1.0 / 512.0;  // months
    StepMethod method = StepMethod::ForwardEuler;

    // Throws ScenarioInvalidError naming the first violated requirement.
    void validate() const {
        if (!(ceiling > 0.0)) throw ScenarioInvalidError("ceiling A must be > 0");
        if (floor < 0.0) throw ScenarioInvalidError("floor w must be >= 0");
        if (!(floor < ceiling)) throw ScenarioInvalidError("floor w must be < ceiling A");
        if (!(report_delay > 0.0)) throw ScenarioInvalidError("report delay t0 must be > 0");
        if (!(beta > 0.0)) throw ScenarioInvalidError("beta must be > 0");
        if (!(dt > 0.0)) throw ScenarioInvalidError("dt must be > 0");
        if (horizon < report_delay)
            throw ScenarioInvalidError("horizon must cover at least one report delay");
    }
};

// Simulated scenario: the long rate at every node and the inflation it
// implies through I = A - i.  Times are months, per the grid.
struct EconTrajectory {
    Grid grid;
    std::vector<double> long_rate;
    std::vector<double> inflation;

    std::size_t size() const noexcept { return long_rate.size(); }
    double time(std::size_t k) const noexcept { return grid.time(k); }
};

inline EconTrajectory simulate_scenario(const InterestScenario& s) {
    s.validate();
    const Grid grid = build_grid(s.dt, s.report_delay, s.horizon);
    const OffsetHistory<ExponentialHistory> init{psi_history(s.ceiling, s.floor, s.beta),
                                                 s.floor};
    const Trajectory traj = integrate(InterestRhs{s.ceiling, s.floor}, init, grid, s.method);

    EconTrajectory out;
    out.grid = grid;
    out.long_rate.assign(traj.values().begin(), traj.values().end());
    out.inflation.resize(traj.size());
    for (std::size_t k = 0; k < traj.size(); ++k)
        out.inflation[k] = s.ceiling - out.long_rate[k];
    return out;
}

// Integrates the same scenario twice — the literal form for i, and the
// shifted canonical form for x = i - w — and returns the largest absolute
// disagreement between i and x + w over all nodes.  The substitution is an
// identity, so anything visibly above rounding means a coding defect.
inline double shift_equivalence_check(const InterestScenario& s) {
    s.validate();
    const Grid grid = build_grid(s.dt, s.report_delay, s.horizon);
    const OffsetHistory<ExponentialHistory> init_i{psi_history(s.ceiling, s.floor, s.beta),
                                                   s.floor};
    const Trajectory direct = integrate(InterestRhs{s.ceiling, s.floor}, init_i, grid, s.method);
    const Trajectory shifted = integrate(CanonicalLogisticRhs{s.ceiling - s.floor},
                                         psi_history(s.ceiling, s.floor, s.beta), grid, s.method);

    double worst = 0.0;
    for (std::size_t k = 0; k < direct.size(); ++k)
        worst = std::max(worst, std::abs(direct.value(k) - (shifted.value(k) + s.floor)));
    return worst;
}

enum class PolicyVerdict {
    StableOrderly,   // (A - w) t0 <= 1/e: no overshoot/collapse cycling
    OscillationRisk, // beyond the non-oscillation bound
};

inline std::string to_string(PolicyVerdict v) {
    return v == PolicyVerdict::StableOrderly ? "StableOrderly" : "OscillationRisk";
}

struct PolicyResult {
    PolicyVerdict verdict = PolicyVerdict::StableOrderly;
    double product = 0.0; // (A - w) * t0, the composite stability parameter
};

// Stability screen on the composite parameter (A - w) t0 against the
// non-oscillation bound 1/e (inclusive).  w may be negative here — a
// subsidised floor — as long as A - w stays positive.
inline PolicyResult policy_check(double A, double w, double t0) {
    if (!(A > 0.0)) throw ScenarioInvalidError("ceiling A must be > 0");
    if (!(t0 > 0.0)) throw ScenarioInvalidError("report delay t0 must be > 0");
    if (!(A - w > 0.0)) throw ScenarioInvalidError("ceiling A must exceed floor w");

    PolicyResult r;
    r.product = (A - w) * t0;
    r.verdict = r.product <= 1.0 / std::numbers::e ? PolicyVerdict::StableOrderly
                                                   : PolicyVerdict::OscillationRisk;
    return r;
}

} // namespace ddelab
