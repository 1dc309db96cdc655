#pragma once

#include <cmath>

#include "errors.hpp"
#include "grid.hpp"
#include "integrate.hpp"
#include "trajectory.hpp"

// Delay logistic equation in its unit-delay canonical form
//
//     z'(t) = a z(t) - z(t) z(t - 1),        a > 0,
//
// together with the exponential initial-function family, the growth-rate /
// delay rescaling that produces it from physical parameters, and the change
// of scale to the saturation form y' = a y (1 - y(t-1)).

namespace ddelab {

// Canonical parameter; the positive equilibrium is z* = a.
struct DelayLogisticParams {
    double a;

    explicit DelayLogisticParams(double a_) : a(a_) {
        if (!(a > 0.0)) throw NonPositiveError("a", a_);
    }
};

// Physical growth rate A (per unit time) with response delay t0.
struct PhysicalParams {
    double growth_rate;
    double delay;

    PhysicalParams(double A, double t0) : growth_rate(A), delay(t0) {
        if (!(A > 0.0)) throw NonPositiveError("growth rate", A);
        if (!(t0 > 0.0)) throw NonPositiveError("delay", t0);
    }
};

// Measuring time in delay units turns (A, t0) into the single number a = A*t0.
inline DelayLogisticParams canonical_params(const PhysicalParams& p) {
    return DelayLogisticParams(p.growth_rate * p.delay);
}

// Right-hand side z' = a z - z z_delayed.
struct CanonicalLogisticRhs {
    double a;
    double operator()(double /*t*/, double z, double zd) const noexcept { return a * z - z * zd; }
};

inline double rhs_canonical(double z, double z_delayed, double a) noexcept {
    return a * z - z * z_delayed;
}

// Saturation-scaled form y = z / a:  y' = a y - a y y_delayed = a y (1 - yd).
struct WrightRhs {
    double a;
    double operator()(double /*t*/, double y, double yd) const noexcept {
        return a * y - a * y * yd;
    }
};

// Exponential initial function phi(t) = beta exp((a - beta) t) on [0, 1].
// Its defining property: phi'(1) = [a - phi(0)] phi(1), so the trajectory
// leaves the history interval with no kink in the first derivative.
inline double phi(double t, double a, double beta) {
    if (!(a > 0.0)) throw NonPositiveError("a", a);
    if (!(beta > 0.0)) throw NonPositiveError("beta", beta);
    if (t < 0.0 || t > 1.0) throw DomainViolationError("phi is defined on [0, 1]");
    return beta * std::exp((a - beta) * t);
}

inline ExponentialHistory phi_history(double a, double beta) {
    if (!(a > 0.0)) throw NonPositiveError("a", a);
    if (!(beta > 0.0)) throw NonPositiveError("beta", beta);
    return ExponentialHistory{beta, a - beta};
}

// How far a candidate history is from satisfying the smooth-junction
// condition h'(1) = [a - h(0)] h(1).  Zero (to rounding) for phi_history.
template <HistoryFunction H> double junction_residual(const H& history, double a) {
    return history.deriv(1.0) - (a - history.value(0.0)) * history.value(1.0);
}

// Convenience run of the canonical problem.
inline Trajectory simulate_canonical(double a, double beta, double dt, double horizon,
                                     StepMethod method) {
    DelayLogisticParams params(a);
    const Grid grid = build_grid(dt, 1.0, horizon);
    return integrate(CanonicalLogisticRhs{params.a}, phi_history(a, beta), grid, method);
}

// Rescaling between canonical (unit-delay) time and physical time t0 * t.
// Values scale by 1/t0 (z = t0 * N picks up the delay factor), derivatives
// by 1/t0^2.
inline Trajectory to_physical(const Trajectory& traj, double t0) {
    if (!(t0 > 0.0)) throw NonPositiveError("t0", t0);
    const Grid& g = traj.grid();
    if (g.delay != 1.0)
        throw DomainViolationError("to_physical expects a unit-delay trajectory");
    Grid scaled = g;
    scaled.dt = g.dt * t0;
    scaled.delay = t0;
    scaled.horizon = g.horizon * t0;
    std::vector<double> v(traj.size()), d(traj.size());
    for (std::size_t k = 0; k < traj.size(); ++k) {
        v[k] = traj.value(k) / t0;
        d[k] = traj.deriv(k) / (t0 * t0);
    }
    return Trajectory(scaled, std::move(v), std::move(d));
}

inline Trajectory to_canonical(const Trajectory& traj, double t0) {
    if (!(t0 > 0.0)) throw NonPositiveError("t0", t0);
    const Grid& g = traj.grid();
    if (g.delay != t0)
        throw DomainViolationError("to_canonical expects the trajectory's delay to equal t0");
    Grid unit = g;
    unit.dt = g.dt / t0;
    unit.delay = 1.0;
    unit.horizon = g.horizon / t0;
    std::vector<double> v(traj.size()), d(traj.size());
    for (std::size_t k = 0; k < traj.size(); ++k) {
        v[k] = traj.value(k) * t0;
        d[k] = traj.deriv(k) * (t0 * t0);
    }
    return Trajectory(unit, std::move(v), std::move(d));
}

// Change of scale y = z / a between the canonical and saturation forms; the
// grid is untouched, values and derivatives divide (or multiply) by a.
inline Trajectory wright_from_canonical(const Trajectory& traj, double a) {
    DelayLogisticParams params(a);
    std::vector<double> v(traj.size()), d(traj.size());
    for (std::size_t k = 0; k < traj.size(); ++k) {
        v[k] = traj.value(k) / params.a;
        d[k] = traj.deriv(k) / params.a;
    }
    return Trajectory(traj.grid(), std::move(v), std::move(d));
}

inline Trajectory canonical_from_wright(const Trajectory& traj, double a) {
    DelayLogisticParams params(a);
    std::vector<double> v(traj.size()), d(traj.size());
    for (std::size_t k = 0; k < traj.size(); ++k) {
        v[k] = traj.value(k) * params.a;
        d[k] = traj.deriv(k) * params.a;
    }
    return Trajectory(traj.grid(), std::move(v), std::move(d));
}

} // namespace ddelab
