#pragma once

#include <cmath>
#include <cstddef>

#include "errors.hpp"

// Uniform time grid on [0, horizon] whose step divides the delay exactly.
// Alignment is what lets every delayed lookup z(t - delay) land on a node
// that was already computed, so the integrators never interpolate history
// except at RK4 stage midpoints.

namespace ddelab {

struct Grid {
    double dt = 0.0;
    double delay = 0.0;
    double horizon = 0.0;
    std::size_t nodes_per_delay = 0; // delay / dt, exact by construction
    std::size_t node_count = 0;      // round(horizon / dt) + 1

    double time(std::size_t k) const noexcept { return static_cast<double>(k) * dt; }
    double last_time() const noexcept { return time(node_count - 1); }
};

// Validates and builds a grid.  Throws NonPositiveError for non-positive
// inputs, HorizonTooShortError when horizon < delay, MisalignedStepError
// when delay/dt is not an integer within relative tolerance 1e-9.
inline Grid build_grid(double dt, double delay, double horizon) {
    if (!(dt > 0.0)) throw NonPositiveError("dt", dt);
    if (!(delay > 0.0)) throw NonPositiveError("delay", delay);
    if (!(horizon > 0.0)) throw NonPositiveError("horizon", horizon);
    if (horizon < delay) throw HorizonTooShortError(horizon, delay);

    const double ratio = delay / dt;
    const double rounded = std::round(ratio);
    if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * ratio)
        throw MisalignedStepError(delay, dt);

    Grid g;
    g.dt = dt;
    g.delay = delay;
    g.horizon = horizon;
    g.nodes_per_delay = static_cast<std::size_t>(rounded);
    g.node_count = static_cast<std::size_t>(std::llround(horizon / dt)) + 1;
    return g;
}

} // namespace ddelab
