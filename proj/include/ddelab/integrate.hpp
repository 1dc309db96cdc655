#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "grid.hpp"
#include "trajectory.hpp"

// Fixed-step integrators for scalar delay differential equations
//
//     z'(t) = f(t, z(t), z(t - delay)),   z(t) = history(t) on [0, delay].
//
// The history is sampled onto the grid nodes of [0, delay] directly; the
// methods then advance from t = delay.  Because the grid step divides the
// delay exactly, plain delayed lookups always hit stored nodes.

namespace ddelab {

template <typename F>
concept DelayRhs = requires(F f, double t, double z, double zd) {
    { f(t, z, zd) } -> std::convertible_to<double>;
};

template <typename H>
concept HistoryFunction = requires(H h, double t) {
    { h.value(t) } -> std::convertible_to<double>;
    { h.deriv(t) } -> std::convertible_to<double>;
};

// History of the form initial * exp(rate * t); covers every initial function
// used by the logistic and interest-rate models.
struct ExponentialHistory {
    double initial = 0.0;
    double rate = 0.0;
    double value(double t) const noexcept { return initial * std::exp(rate * t); }
    double deriv(double t) const noexcept { return rate * value(t); }
};

// An existing history shifted by a constant level.
template <HistoryFunction H> struct OffsetHistory {
    H inner;
    double offset = 0.0;
    double value(double t) const noexcept { return inner.value(t) + offset; }
    double deriv(double t) const noexcept { return inner.deriv(t); }
};

struct ConstantHistory {
    double level = 0.0;
    double value(double) const noexcept { return level; }
    double deriv(double) const noexcept { return 0.0; }
};

enum class StepMethod {
    ForwardEuler, // first order; the delayed value is the stored node
    ClassicalRK4, // fourth-order stages; off-node delayed lookups via Hermite
    Rk4HeldDelay, // RK4 stages with the delayed value sampled once per step
                  // at the left node and held across all four stages, the way
                  // fixed-pipeline delay buffers behave in system-dynamics
                  // simulators.  Held delay caps global accuracy at first
                  // order even though the stages are fourth order.
};

inline std::string method_name(StepMethod m) {
    switch (m) {
    case StepMethod::ForwardEuler: return "euler";
    case StepMethod::ClassicalRK4: return "rk4";
    case StepMethod::Rk4HeldDelay: return "rk4-held";
    }
    return "unknown";
}

namespace detail {

// Read access into a trajectory that is still being written.  `frontier` is
// the last node index already computed; asking beyond it is a logic error
// surfaced as FutureLookupError rather than silent garbage.
struct PartialLookup {
    const Grid& grid;
    const std::vector<double>& values;
    const std::vector<double>& derivs;
    std::size_t frontier;

    double at(double t) const {
        const double pos = t / grid.dt;
        const double nearest = std::round(pos);
        const auto k = static_cast<std::size_t>(nearest);
        if (k <= frontier && t == grid.time(k)) return values[k];
        auto k0 = static_cast<std::size_t>(pos);
        if (k0 + 1 > frontier) throw FutureLookupError(t, grid.time(frontier));
        const double s = (t - grid.time(k0)) / grid.dt;
        return hermite(s, grid.dt, values[k0], derivs[k0], values[k0 + 1], derivs[k0 + 1]);
    }
};

} // namespace detail

// Integrates the delay equation over the grid with the requested method.
// Nodes t_k <= delay carry the sampled history (derivative included); the
// node at t = delay and everything after carry the equation's own slope.
// Throws NonFiniteError at the first node whose value overflows or is NaN.
template <DelayRhs F, HistoryFunction H>
Trajectory integrate(F&& rhs, const H& history, const Grid& grid, StepMethod method) {
    const std::size_t n = grid.nodes_per_delay;
    const std::size_t m = grid.node_count;
    std::vector<double> z(m), dz(m);

    for (std::size_t k = 0; k <= n; ++k) {
        const double t = grid.time(k);
        z[k] = history.value(t);
        dz[k] = history.deriv(t);
        if (!std::isfinite(z[k])) throw NonFiniteError(t);
    }
    // From the junction node on, the recorded slope is the equation's.
    dz[n] = rhs(grid.time(n), z[n], z[0]);

    const double dt = grid.dt;
    switch (method) {
    case StepMethod::ForwardEuler:
        for (std::size_t k = n; k + 1 < m; ++k) {
            const double d = rhs(grid.time(k), z[k], z[k - n]);
            dz[k] = d;
            z[k + 1] = z[k] + dt * d;
            if (!std::isfinite(z[k + 1])) throw NonFiniteError(grid.time(k + 1));
        }
        break;

    case StepMethod::ClassicalRK4:
        for (std::size_t k = n; k + 1 < m; ++k) {
            const double t = grid.time(k);
            const detail::PartialLookup look{grid, z, dz, k};
            const double zd0 = z[k - n];
            const double zdh = look.at(t + 0.5 * dt - grid.delay); // shared by k2, k3
            const double zd1 = z[k + 1 - n];
            const double y = z[k];
            const double k1 = rhs(t, y, zd0);
            const double k2 = rhs(t + 0.5 * dt, y + 0.5 * dt * k1, zdh);
            const double k3 = rhs(t + 0.5 * dt, y + 0.5 * dt * k2, zdh);
            const double k4 = rhs(t + dt, y + dt * k3, zd1);
            z[k + 1] = y + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            if (!std::isfinite(z[k + 1])) throw NonFiniteError(grid.time(k + 1));
            dz[k + 1] = rhs(grid.time(k + 1), z[k + 1], zd1);
        }
        break;

    case StepMethod::Rk4HeldDelay:
        for (std::size_t k = n; k + 1 < m; ++k) {
            const double t = grid.time(k);
            const double zd = z[k - n]; // held across all four stages
            const double y = z[k];
            const double k1 = rhs(t, y, zd);
            const double k2 = rhs(t + 0.5 * dt, y + 0.5 * dt * k1, zd);
            const double k3 = rhs(t + 0.5 * dt, y + 0.5 * dt * k2, zd);
            const double k4 = rhs(t + dt, y + dt * k3, zd);
            z[k + 1] = y + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            if (!std::isfinite(z[k + 1])) throw NonFiniteError(grid.time(k + 1));
            dz[k + 1] = rhs(grid.time(k + 1), z[k + 1], z[k + 1 - n]);
        }
        break;
    }

    if (m - 1 > n && method == StepMethod::ForwardEuler)
        dz[m - 1] = rhs(grid.time(m - 1), z[m - 1], z[m - 1 - n]);

    return Trajectory(grid, std::move(z), std::move(dz));
}

} // namespace ddelab
