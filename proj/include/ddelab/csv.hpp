#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "econ.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "regime.hpp"
#include "trajectory.hpp"

// CSV emission with one pinned numeric format — fixed nine decimal places —
// so identical inputs always serialise to identical bytes, and a helper for
// reading step-size flags given either as decimals or as exact ratios.

namespace ddelab {

inline std::string format_fixed9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", v);
    return buf;
}

// Accepts "0.001953125" or "1/512"; both parse to the same double because a
// ratio is evaluated as one IEEE division.  Throws DomainViolationError on
// anything else (including a zero denominator).
inline double parse_fraction(std::string_view text) {
    const auto parse_number = [](std::string_view s) {
        double out = 0.0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            throw DomainViolationError("malformed number: '" + std::string(s) + "'");
        return out;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return parse_number(text);
    const double num = parse_number(text.substr(0, slash));
    const double den = parse_number(text.substr(slash + 1));
    if (den == 0.0) throw DomainViolationError("fraction denominator must be nonzero");
    return num / den;
}

inline void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
    os << "time,z,dz_dt\n";
    for (std::size_t k = 0; k < traj.size(); ++k)
        os << format_fixed9(traj.time(k)) << ',' << format_fixed9(traj.value(k)) << ','
           << format_fixed9(traj.deriv(k)) << '\n';
}

inline void write_error_table_csv(std::ostream& os, const ErrorTable& table) {
    os << "time,z_actual,z_simulated,delta\n";
    for (const ErrorRow& r : table.rows)
        os << format_fixed9(r.time) << ',' << format_fixed9(r.z_actual) << ','
           << format_fixed9(r.z_simulated) << ',' << format_fixed9(r.delta()) << '\n';
}

// Side-by-side layout for several step sizes over the same sample times: the
// time and actual columns appear once, followed by one simulated/delta pair
// per run.  Column suffixes come from `labels` — typically the step-size
// flags exactly as the caller wrote them (e.g. "1/512").
inline void write_error_comparison_csv(std::ostream& os,
                                       std::span<const ErrorTable> tables,
                                       std::span<const std::string> labels) {
    if (tables.empty() || tables.size() != labels.size())
        throw DomainViolationError("error comparison needs one label per table");
    const std::size_t row_count = tables.front().rows.size();
    for (const ErrorTable& t : tables)
        if (t.rows.size() != row_count)
            throw DomainViolationError("error comparison tables must share sample times");
    os << "time,z_actual";
    for (const std::string& label : labels)
        os << ",z_simulated_" << label << ",delta_" << label;
    os << '\n';
    for (std::size_t i = 0; i < row_count; ++i) {
        const ErrorRow& lead = tables.front().rows[i];
        for (const ErrorTable& t : tables)
            if (t.rows[i].time != lead.time)
                throw DomainViolationError("error comparison tables must share sample times");
        os << format_fixed9(lead.time) << ',' << format_fixed9(lead.z_actual);
        for (const ErrorTable& t : tables)
            os << ',' << format_fixed9(t.rows[i].z_simulated) << ','
               << format_fixed9(t.rows[i].delta());
        os << '\n';
    }
}

inline void write_econ_csv(std::ostream& os, const EconTrajectory& econ) {
    os << "time_months,time_years,interest_percent,inflation_percent\n";
    for (std::size_t k = 0; k < econ.size(); ++k) {
        const double months = econ.time(k);
        os << format_fixed9(months) << ',' << format_fixed9(months / 12.0) << ','
           << format_fixed9(100.0 * econ.long_rate[k]) << ','
           << format_fixed9(100.0 * econ.inflation[k]) << '\n';
    }
}

// One classifier row per parameter value; `empirical` is a verdict name or
// "too-short" when the record could not be judged (the numeric columns are
// NaN in that case).
struct RegimeReportRow {
    double a = 0.0;
    Regime predicted = Regime::AsymptoticNonOscillatory;
    std::string empirical;
    double envelope_ratio = std::nan("");
    double terminal_deviation = std::nan("");
};

inline void write_regime_report_csv(std::ostream& os, std::span<const RegimeReportRow> rows) {
    os << "a,predicted,empirical,envelope_ratio,terminal_deviation\n";
    for (const RegimeReportRow& r : rows)
        os << format_fixed9(r.a) << ',' << to_string(r.predicted) << ',' << r.empirical << ','
           << format_fixed9(r.envelope_ratio) << ',' << format_fixed9(r.terminal_deviation)
           << '\n';
}

inline void write_hopf_csv(std::ostream& os, const HopfEstimate& est) {
    os << "a_star,bracket_lo,bracket_hi,iterations\n";
    os << format_fixed9(est.a_star) << ',' << format_fixed9(est.bracket_lo) << ','
       << format_fixed9(est.bracket_hi) << ',' << est.iterations << '\n';
}

inline void write_policy_csv(std::ostream& os, double A, double w, double t0,
                             const PolicyResult& result) {
    os << "A,w,t0,product,threshold,verdict\n";
    os << format_fixed9(A) << ',' << format_fixed9(w) << ',' << format_fixed9(t0) << ','
       << format_fixed9(result.product) << ',' << format_fixed9(1.0 / std::numbers::e) << ','
       << to_string(result.verdict) << '\n';
}

} // namespace ddelab
