#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "errors.hpp"
#include "integrate.hpp"
#include "logistic.hpp"
#include "trajectory.hpp"

// Qualitative behaviour of delay-logistic trajectories about the positive
// equilibrium: monotone approach, damped oscillation, or a sustained limit
// cycle — both as a prediction from the parameter alone and as an empirical
// verdict read off a simulated record.

namespace ddelab {

enum class Regime {
    AsymptoticNonOscillatory,
    DampedOscillatory,
    SustainedOscillatory,
};

inline std::string to_string(Regime r) {
    switch (r) {
    case Regime::AsymptoticNonOscillatory: return "asymptotic";
    case Regime::DampedOscillatory: return "damped";
    case Regime::SustainedOscillatory: return "sustained";
    }
    return "unknown";
}

// Non-oscillation holds up to a = 1/e; the proved threshold for sustained
// oscillation is 1.5706 (just below pi/2, where the linearisation loses
// stability).  Both bounds are inclusive on their lower side.
inline constexpr double asymptotic_bound = 1.0 / std::numbers::e;
inline constexpr double sustained_bound = 1.5706;

inline Regime predict_regime(double a) {
    if (!(a > 0.0)) throw NonPositiveError("a", a);
    if (a <= asymptotic_bound) return Regime::AsymptoticNonOscillatory;
    if (a <= sustained_bound) return Regime::DampedOscillatory;
    return Regime::SustainedOscillatory;
}

// Interpolated times at which z - level changes sign, over the full record.
// Samples with |z - level| below a noise floor (1e-7 of the largest
// excursion) are ignored, so a record that has numerically converged cannot
// manufacture crossings out of rounding noise.
inline std::vector<double> sign_change_times(const Trajectory& traj, double level) {
    double umax = 0.0;
    for (std::size_t k = 0; k < traj.size(); ++k)
        umax = std::max(umax, std::abs(traj.value(k) - level));
    const double floor_ = 1e-7 * umax;

    std::vector<double> crossings;
    int last_sign = 0;
    std::size_t last_idx = 0;
    for (std::size_t k = 0; k < traj.size(); ++k) {
        const double u = traj.value(k) - level;
        if (std::abs(u) <= floor_) continue;
        const int s = u > 0.0 ? 1 : -1;
        if (last_sign != 0 && s != last_sign) {
            const double u0 = traj.value(last_idx) - level;
            const double t0 = traj.time(last_idx);
            const double t1 = traj.time(k);
            crossings.push_back(t0 + (t1 - t0) * (u0 / (u0 - u)));
        }
        last_sign = s;
        last_idx = k;
    }
    return crossings;
}

struct OscillationAnalysis {
    double equilibrium = 0.0;
    std::vector<double> crossing_times;   // significant crossings, full record
    std::vector<double> peak_amplitudes;  // |z - equilibrium| at successive
                                          // post-transient extrema (both sides)
    double envelope_ratio = 0.0;          // last / first upper-side peak
    double mean_peak_ratio = 0.0;         // geometric mean successive ratio
    double terminal_deviation = 0.0;      // |z(T) - equilibrium|
    Regime verdict = Regime::AsymptoticNonOscillatory;
};

// Classifies a record against its equilibrium.  The first transient_fraction
// of the record is discarded for the oscillation measurements; verdict rules:
//
//  * fewer than two post-transient crossings and a terminal deviation below
//    1e-3 * equilibrium: converged — DampedOscillatory if the full record
//    ever crossed twice, AsymptoticNonOscillatory otherwise;
//  * at least two post-transient crossings: the upper-side peak envelope
//    decides — geometric mean successive ratio below 1 - rel_tol is
//    DampedOscillatory, otherwise SustainedOscillatory.  Only same-side
//    peaks are compared because asymmetric cycles would make alternating
//    ratios meaningless;
//  * anything undecidable (neither converged nor enough peaks) throws
//    TooShortError rather than guessing.
//
// Preconditions: equilibrium > 0; the post-transient window must cover at
// least 20 delay units.
inline OscillationAnalysis analyze_trajectory(const Trajectory& traj, double equilibrium,
                                              double transient_fraction = 0.5,
                                              double rel_tol = 0.01) {
    if (!(equilibrium > 0.0)) throw NonPositiveError("equilibrium", equilibrium);
    if (!(rel_tol > 0.0)) throw NonPositiveError("rel_tol", rel_tol);
    if (transient_fraction < 0.0 || transient_fraction >= 1.0)
        throw DomainViolationError("transient_fraction must lie in [0, 1)");

    const Grid& g = traj.grid();
    const double total = g.last_time();
    if ((1.0 - transient_fraction) * total < 20.0 * g.delay)
        throw TooShortError("post-transient window must cover at least 20 delay units");

    OscillationAnalysis out;
    out.equilibrium = equilibrium;
    out.crossing_times = sign_change_times(traj, equilibrium);
    out.terminal_deviation = std::abs(traj.final_value() - equilibrium);

    const double window_start = transient_fraction * total;
    std::vector<double> post;
    for (double c : out.crossing_times)
        if (c >= window_start) post.push_back(c);

    if (post.size() < 2) {
        if (out.terminal_deviation >= 1e-3 * equilibrium)
            throw TooShortError("record neither oscillates past the transient nor converges");
        out.verdict = out.crossing_times.size() >= 2 ? Regime::DampedOscillatory
                                                     : Regime::AsymptoticNonOscillatory;
        return out;
    }

    // Complete crossing-bounded intervals; one extremum per interval.
    std::vector<double> upper;
    for (std::size_t i = 0; i + 1 < post.size(); ++i) {
        double peak = 0.0;
        double side = 0.0;
        for (std::size_t k = 0; k < traj.size(); ++k) {
            const double t = traj.time(k);
            if (t <= post[i] || t >= post[i + 1]) continue;
            const double u = traj.value(k) - equilibrium;
            if (std::abs(u) > peak) {
                peak = std::abs(u);
                side = u;
            }
        }
        if (peak == 0.0) continue; // no sample strictly inside the interval
        out.peak_amplitudes.push_back(peak);
        if (side > 0.0) upper.push_back(peak);
    }

    if (upper.size() < 4)
        throw TooShortError("need at least 4 post-transient upper-side peaks to judge the envelope");

    out.envelope_ratio = upper.back() / upper.front();
    out.mean_peak_ratio =
        std::pow(out.envelope_ratio, 1.0 / static_cast<double>(upper.size() - 1));
    out.verdict = out.mean_peak_ratio < 1.0 - rel_tol ? Regime::DampedOscillatory
                                                      : Regime::SustainedOscillatory;
    return out;
}

// Simulation settings shared by the empirical classifier front ends.
struct RegimeSimConfig {
    double beta = 0.12;
    double dt = 1.0 / 512.0;
    double horizon = 300.0;
    double transient_fraction = 0.5;
    double rel_tol = 0.01;
    StepMethod method = StepMethod::ForwardEuler;
};

// Simulates the canonical problem at parameter a and classifies the record
// against the equilibrium z* = a.
inline OscillationAnalysis analyze_canonical(double a, const RegimeSimConfig& cfg = {}) {
    const Trajectory traj = simulate_canonical(a, cfg.beta, cfg.dt, cfg.horizon, cfg.method);
    return analyze_trajectory(traj, a, cfg.transient_fraction, cfg.rel_tol);
}

struct HopfEstimate {
    double a_star = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    std::size_t iterations = 0;
};

// Bisects for the damped-to-sustained transition of the empirical verdict.
// The lower endpoint must classify as non-sustained and the upper as
// sustained, otherwise the bracket does not straddle the transition and
// BracketInvalidError is thrown.  Deterministic: same arguments, same result.
inline HopfEstimate hopf_boundary_search(double lo, double hi, double param_tol,
                                         const RegimeSimConfig& cfg = {}) {
    if (!(lo > 0.0)) throw NonPositiveError("lo", lo);
    if (!(param_tol > 0.0)) throw NonPositiveError("param_tol", param_tol);
    if (!(lo < hi)) throw BracketInvalidError("bracket endpoints must satisfy lo < hi");

    const bool lo_sustained = analyze_canonical(lo, cfg).verdict == Regime::SustainedOscillatory;
    const bool hi_sustained = analyze_canonical(hi, cfg).verdict == Regime::SustainedOscillatory;
    if (lo_sustained || !hi_sustained)
        throw BracketInvalidError("bracket must classify non-sustained at lo and sustained at hi");

    HopfEstimate est;
    while (hi - lo > param_tol) {
        const double mid = 0.5 * (lo + hi);
        if (analyze_canonical(mid, cfg).verdict == Regime::SustainedOscillatory)
            hi = mid;
        else
            lo = mid;
        ++est.iterations;
    }
    est.bracket_lo = lo;
    est.bracket_hi = hi;
    est.a_star = 0.5 * (lo + hi);
    return est;
}

} // namespace ddelab
