#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "errors.hpp"
#include "grid.hpp"
#include "integrate.hpp"
#include "logistic.hpp"

// Closed-form solution of the canonical delay logistic equation for the
// particular initial function phi with beta = a/2, obtained by integrating
// the equation interval by interval (method of steps).  Three delay
// intervals deep is as far as the quadratures stay elementary, so the
// domain is [0, 3].

namespace ddelab {

namespace detail {

// 0 <= t <= 1: the initial function itself.
inline double exact_piece1(double t, double a) noexcept {
    const double b = 0.5 * a;
    return b * std::exp(b * t);
}

// 1 <= t <= 2: separable step with the known exponential history.
inline double exact_piece2(double t, double a) noexcept {
    const double b = 0.5 * a;
    const double phi1 = b * std::exp(b);
    return phi1 * std::exp(a * (t - 1.0) - (std::exp(b * (t - 1.0)) - 1.0));
}

// 2 <= t <= 3: the delayed factor is now piece 2; substituting
// s = exp((a/2)(t-2)) makes the remaining integral elementary.
inline double exact_piece3(double t, double a) noexcept {
    const double b = 0.5 * a;
    const double phi1 = b * std::exp(b);
    const double z2 = phi1 * std::exp(a - (std::exp(b) - 1.0));
    const double s = std::exp(b * (t - 2.0));
    const double inner = -std::exp(-s) * (s + 1.0) + 2.0 / std::numbers::e;
    return z2 * std::exp(a * (t - 2.0) - std::exp(0.5 * (a + 2.0)) * inner);
}

} // namespace detail

// Exact z(t) for the beta = a/2 run, t in [0, 3].
inline double exact_value(double t, double a) {
    if (!(a > 0.0)) throw NonPositiveError("a", a);
    if (t < 0.0 || t > 3.0)
        throw DomainViolationError("exact_value covers t in [0, 3] only");
    if (t <= 1.0) return detail::exact_piece1(t, a);
    if (t <= 2.0) return detail::exact_piece2(t, a);
    return detail::exact_piece3(t, a);
}

// One comparison row: exact value against the simulated node value at the
// same grid time; delta keeps the exact-minus-simulated convention.
struct ErrorRow {
    double time;
    double z_actual;
    double z_simulated;
    double delta() const noexcept { return z_actual - z_simulated; }
};

struct ErrorTable {
    StepMethod method;
    double dt;
    std::vector<ErrorRow> rows;
};

// The traditional sampling comb for the [0, 3] benchmark.
inline std::vector<double> quarter_marks() {
    std::vector<double> t(13);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = 0.25 * static_cast<double>(i);
    return t;
}

// Runs the beta = a/2 problem to horizon 3 with the given method and step,
// then tabulates exact vs simulated at the requested times.  Sample times
// must lie in [0, 3] and on the grid.
inline ErrorTable error_table(StepMethod method, double dt, double a,
                              std::span<const double> sample_times) {
    const Trajectory traj = simulate_canonical(a, 0.5 * a, dt, 3.0, method);
    ErrorTable table{method, dt, {}};
    table.rows.reserve(sample_times.size());
    for (double t : sample_times) {
        if (t < 0.0 || t > 3.0)
            throw DomainViolationError("sample times must lie in [0, 3]");
        const double pos = t / dt;
        const double rounded = std::round(pos);
        if (std::abs(pos - rounded) > 1e-9 * (pos + 1.0))
            throw DomainViolationError("sample times must fall on the grid");
        const auto k = static_cast<std::size_t>(rounded);
        table.rows.push_back({t, exact_value(t, a), traj.value(k)});
    }
    return table;
}

inline ErrorTable error_table(StepMethod method, double dt, double a) {
    const std::vector<double> marks = quarter_marks();
    return error_table(method, dt, a, marks);
}

} // namespace ddelab
