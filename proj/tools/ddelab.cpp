// Command-line front end.  Exit codes: 0 success, 1 invalid arguments or
// model configuration, 2 numerical failure during integration, 3 I/O failure.

#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ddelab/ddelab.hpp"

namespace {

struct IoFailure : std::runtime_error {
    explicit IoFailure(const std::string& what) : std::runtime_error(what) {}
};

// Writes the finished CSV text to the chosen destination ("-" = stdout).
void emit(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        if (!std::cout) throw IoFailure("writing to stdout failed");
        return;
    }
    std::ofstream out(path);
    if (!out) throw IoFailure("cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) throw IoFailure("writing to '" + path + "' failed");
}

ddelab::StepMethod method_from_name(const std::string& name) {
    if (name == "euler") return ddelab::StepMethod::ForwardEuler;
    if (name == "rk4") return ddelab::StepMethod::ClassicalRK4;
    return ddelab::StepMethod::Rk4HeldDelay;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical laboratory for the delay logistic equation\n"
                 "z'(t) = a z(t) - z(t) z(t-1) and the delayed two-rate\n"
                 "interest/inflation model built on it."};
    app.require_subcommand(1);

    const std::vector<std::string> methods{"euler", "rk4", "rk4-held"};

    // --- simulate-canonical --------------------------------------------
    auto* sim = app.add_subcommand(
        "simulate-canonical",
        "Integrate the canonical equation from the exponential initial path\n"
        "phi(t) = beta exp((a - beta) t) and write time,z,dz_dt CSV.");
    double sim_a = 1.57, sim_beta = 0.785, sim_horizon = 3.0;
    std::string sim_dt = "1/512", sim_method = "euler", sim_out = "-";
    sim->add_option("--a", sim_a, "growth parameter a (> 0)")->required();
    sim->add_option("--beta", sim_beta, "initial value beta (> 0)")->required();
    sim->add_option("--dt", sim_dt, "step size, decimal or ratio (default 1/512)");
    sim->add_option("--horizon", sim_horizon, "end time in delay units")->required();
    sim->add_option("--method", sim_method, "stepping method (default euler)")
        ->check(CLI::IsMember(methods));
    sim->add_option("-o,--output", sim_out, "output file (default stdout)");
    sim->callback([&] {
        const ddelab::Trajectory traj =
            ddelab::simulate_canonical(sim_a, sim_beta, ddelab::parse_fraction(sim_dt),
                                       sim_horizon, method_from_name(sim_method));
        std::ostringstream text;
        ddelab::write_trajectory_csv(text, traj);
        emit(sim_out, text.str());
    });

    // --- exact-compare ---------------------------------------------------
    auto* cmp = app.add_subcommand(
        "exact-compare",
        "Closed-form solution vs a fixed-step run of the benchmark problem\n"
        "(beta = a/2, horizon 3), tabulated as time,z_actual,z_simulated,delta.\n"
        "The defaults (a=1.57, rk4-held, --dt 1/512 or 1/1024) regenerate the\n"
        "reference accuracy table frozen in this project's test suite.");
    double cmp_a = 1.57;
    std::string cmp_method = "rk4-held", cmp_out = "-";
    std::vector<std::string> cmp_dts;
    std::vector<double> cmp_times;
    cmp->add_option("--a", cmp_a, "growth parameter a (> 0, default 1.57)");
    cmp->add_option("--dt", cmp_dts,
                    "step size, decimal or ratio; repeatable — several step\n"
                    "sizes emit one simulated/delta column pair each\n"
                    "(default 1/512)");
    cmp->add_option("--method", cmp_method, "stepping method (default rk4-held)")
        ->check(CLI::IsMember(methods));
    cmp->add_option("--time", cmp_times,
                    "sample time in [0, 3], repeatable (default: every 0.25)");
    cmp->add_option("-o,--output", cmp_out, "output file (default stdout)");
    cmp->callback([&] {
        const std::vector<std::string> dt_labels =
            cmp_dts.empty() ? std::vector<std::string>{"1/512"} : cmp_dts;
        std::vector<ddelab::ErrorTable> tables;
        tables.reserve(dt_labels.size());
        for (const std::string& label : dt_labels) {
            const double dt = ddelab::parse_fraction(label);
            tables.push_back(
                cmp_times.empty()
                    ? ddelab::error_table(method_from_name(cmp_method), dt, cmp_a)
                    : ddelab::error_table(method_from_name(cmp_method), dt, cmp_a,
                                          cmp_times));
        }
        std::ostringstream text;
        if (tables.size() == 1)
            ddelab::write_error_table_csv(text, tables.front());
        else
            ddelab::write_error_comparison_csv(text, tables, dt_labels);
        emit(cmp_out, text.str());
    });

    // --- regime-report ---------------------------------------------------
    auto* rep = app.add_subcommand(
        "regime-report",
        "Predicted vs empirically classified regime per parameter value, as\n"
        "a,predicted,empirical,envelope_ratio,terminal_deviation CSV.  Rows\n"
        "whose record is too short to judge say 'too-short' with NaN metrics.");
    std::vector<double> rep_as;
    double rep_beta = 0.12, rep_horizon = 300.0, rep_transient = 0.5, rep_reltol = 0.01;
    std::string rep_dt = "1/512", rep_method = "euler", rep_out = "-";
    rep->add_option("--a", rep_as, "parameter value, repeatable")->required();
    rep->add_option("--beta", rep_beta, "initial value (default 0.12)");
    rep->add_option("--dt", rep_dt, "step size (default 1/512)");
    rep->add_option("--horizon", rep_horizon, "record length in delay units (default 300)");
    rep->add_option("--transient", rep_transient,
                    "fraction of the record discarded as transient (default 0.5)");
    rep->add_option("--rel-tol", rep_reltol, "peak-ratio tolerance (default 0.01)");
    rep->add_option("--method", rep_method, "stepping method (default euler)")
        ->check(CLI::IsMember(methods));
    rep->add_option("-o,--output", rep_out, "output file (default stdout)");
    rep->callback([&] {
        ddelab::RegimeSimConfig cfg;
        cfg.beta = rep_beta;
        cfg.dt = ddelab::parse_fraction(rep_dt);
        cfg.horizon = rep_horizon;
        cfg.transient_fraction = rep_transient;
        cfg.rel_tol = rep_reltol;
        cfg.method = method_from_name(rep_method);
        std::vector<ddelab::RegimeReportRow> rows;
        for (double a : rep_as) {
            ddelab::RegimeReportRow row;
            row.a = a;
            row.predicted = ddelab::predict_regime(a);
            try {
                const ddelab::OscillationAnalysis r = ddelab::analyze_canonical(a, cfg);
                row.empirical = ddelab::to_string(r.verdict);
                row.envelope_ratio = r.envelope_ratio;
                row.terminal_deviation = r.terminal_deviation;
            } catch (const ddelab::TooShortError&) {
                row.empirical = "too-short";
            }
            rows.push_back(std::move(row));
        }
        std::ostringstream text;
        ddelab::write_regime_report_csv(text, rows);
        emit(rep_out, text.str());
    });

    // --- hopf-scan -------------------------------------------------------
    auto* hopf = app.add_subcommand(
        "hopf-scan",
        "Bisect for the parameter value where the empirical verdict flips\n"
        "from damped to sustained oscillation.");
    double hopf_lo = 1.50, hopf_hi = 1.65, hopf_tol = 0.002;
    double hopf_beta = 0.12, hopf_horizon = 300.0;
    std::string hopf_dt = "1/512", hopf_method = "euler", hopf_out = "-";
    hopf->add_option("--lo", hopf_lo, "lower bracket endpoint (default 1.50)");
    hopf->add_option("--hi", hopf_hi, "upper bracket endpoint (default 1.65)");
    hopf->add_option("--tol", hopf_tol, "bracket width to stop at (default 0.002)");
    hopf->add_option("--beta", hopf_beta, "initial value (default 0.12)");
    hopf->add_option("--dt", hopf_dt, "step size (default 1/512)");
    hopf->add_option("--horizon", hopf_horizon, "record length per probe (default 300)");
    hopf->add_option("--method", hopf_method, "stepping method (default euler)")
        ->check(CLI::IsMember(methods));
    hopf->add_option("-o,--output", hopf_out, "output file (default stdout)");
    hopf->callback([&] {
        ddelab::RegimeSimConfig cfg;
        cfg.beta = hopf_beta;
        cfg.dt = ddelab::parse_fraction(hopf_dt);
        cfg.horizon = hopf_horizon;
        cfg.method = method_from_name(hopf_method);
        const ddelab::HopfEstimate est =
            ddelab::hopf_boundary_search(hopf_lo, hopf_hi, hopf_tol, cfg);
        std::ostringstream text;
        ddelab::write_hopf_csv(text, est);
        emit(hopf_out, text.str());
    });

    // --- simulate-econ ---------------------------------------------------
    auto* econ = app.add_subcommand(
        "simulate-econ",
        "Integrate the delayed interest-rate equation\n"
        "i' = A (i - w) - i(t - t0) (i - w) from i = psi + w and write\n"
        "time_months,time_years,interest_percent,inflation_percent CSV.");
    double econ_A = 0.12, econ_w = 0.0, econ_t0 = 14.0, econ_beta = 0.02,
           econ_horizon = 1800.0;
    std::string econ_dt = "1/512", econ_method = "euler", econ_out = "-";
    econ->add_option("-A,--ceiling", econ_A, "nominal ceiling A (> 0)")->required();
    econ->add_option("-w,--floor", econ_w, "real-rate floor w (default 0)");
    econ->add_option("--t0", econ_t0, "reporting delay in months (> 0)")->required();
    econ->add_option("--beta", econ_beta, "initial displacement above the floor (> 0)")
        ->required();
    econ->add_option("--dt", econ_dt, "step size in months (default 1/512)");
    econ->add_option("--horizon", econ_horizon, "end time in months")->required();
    econ->add_option("--method", econ_method, "stepping method (default euler)")
        ->check(CLI::IsMember(methods));
    econ->add_option("-o,--output", econ_out, "output file (default stdout)");
    econ->callback([&] {
        ddelab::InterestScenario s;
        s.ceiling = econ_A;
        s.floor = econ_w;
        s.report_delay = econ_t0;
        s.beta = econ_beta;
        s.horizon = econ_horizon;
        s.dt = ddelab::parse_fraction(econ_dt);
        s.method = method_from_name(econ_method);
        const ddelab::EconTrajectory traj = ddelab::simulate_scenario(s);
        std::ostringstream text;
        ddelab::write_econ_csv(text, traj);
        emit(econ_out, text.str());
    });

    // --- policy-check ----------------------------------------------------
    auto* pol = app.add_subcommand(
        "policy-check",
        "Screen the composite stability parameter (A - w) t0 against the\n"
        "non-oscillation bound 1/e.  The floor w may be negative (subsidised\n"
        "credit) as long as A - w stays positive.");
    double pol_A = 0.12, pol_w = 0.0, pol_t0 = 14.0;
    std::string pol_out = "-";
    pol->add_option("-A,--ceiling", pol_A, "nominal ceiling A (> 0)")->required();
    pol->add_option("-w,--floor", pol_w, "real-rate floor w (default 0, may be negative)");
    pol->add_option("--t0", pol_t0, "reporting delay in months (> 0)")->required();
    pol->add_option("-o,--output", pol_out, "output file (default stdout)");
    pol->callback([&] {
        const ddelab::PolicyResult result = ddelab::policy_check(pol_A, pol_w, pol_t0);
        std::ostringstream text;
        ddelab::write_policy_csv(text, pol_A, pol_w, pol_t0, result);
        emit(pol_out, text.str());
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the message
        return 1;
    } catch (const ddelab::NonFiniteError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 2;
    } catch (const ddelab::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const IoFailure& e) {
        std::cerr << "i/o failure: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
