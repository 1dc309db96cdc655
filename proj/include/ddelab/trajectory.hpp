#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "grid.hpp"

// Immutable result of one integration run: node values z(t_k) alongside the
// derivative z'(t_k) at every node.  Storing the derivative makes cubic
// Hermite interpolation between nodes free of extra right-hand-side
// evaluations, which RK4 stage lookups rely on.

namespace ddelab {

namespace detail {

// Cubic Hermite basis on one interval [t0, t0+h], s in [0, 1].
inline double hermite(double s, double h, double v0, double d0, double v1, double d1) noexcept {
    const double s2 = s * s;
    const double s3 = s2 * s;
    const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
    const double h10 = s3 - 2.0 * s2 + s;
    const double h01 = -2.0 * s3 + 3.0 * s2;
    const double h11 = s3 - s2;
    return h00 * v0 + h10 * h * d0 + h01 * v1 + h11 * h * d1;
}

} // namespace detail

class Trajectory {
  public:
    Trajectory(Grid grid, std::vector<double> values, std::vector<double> derivs)
        : grid_(grid), values_(std::move(values)), derivs_(std::move(derivs)) {
        if (values_.size() != grid_.node_count || derivs_.size() != grid_.node_count)
            throw DomainViolationError("trajectory arrays must have one entry per grid node");
    }

    const Grid& grid() const noexcept { return grid_; }
    std::size_t size() const noexcept { return values_.size(); }
    double time(std::size_t k) const noexcept { return grid_.time(k); }
    double value(std::size_t k) const noexcept { return values_[k]; }
    double deriv(std::size_t k) const noexcept { return derivs_[k]; }
    std::span<const double> values() const noexcept { return values_; }
    std::span<const double> derivs() const noexcept { return derivs_; }
    double final_value() const noexcept { return values_.back(); }

  private:
    Grid grid_;
    std::vector<double> values_;
    std::vector<double> derivs_;
};

// Value at an arbitrary time in [0, horizon].  On-node queries return the
// stored value bit-exactly; off-node queries use cubic Hermite interpolation
// on the containing interval.  Throws DomainViolationError for t < 0 and
// FutureLookupError for t beyond the recorded horizon.
inline double delayed_value(const Trajectory& traj, double t) {
    const Grid& g = traj.grid();
    if (t < 0.0) throw DomainViolationError("lookup time must be >= 0");
    if (t > g.last_time() * (1.0 + 1e-12) && t > g.last_time() + 1e-12)
        throw FutureLookupError(t, g.last_time());

    const double pos = t / g.dt;
    const double nearest = std::round(pos);
    const auto k = static_cast<std::size_t>(nearest);
    if (k < traj.size() && t == g.time(k)) return traj.value(k);

    auto k0 = static_cast<std::size_t>(pos);
    if (k0 + 1 >= traj.size()) k0 = traj.size() - 2;
    const double s = (t - g.time(k0)) / g.dt;
    return detail::hermite(s, g.dt, traj.value(k0), traj.deriv(k0), traj.value(k0 + 1),
                           traj.deriv(k0 + 1));
}

} // namespace ddelab
