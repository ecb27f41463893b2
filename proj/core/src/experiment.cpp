#include "liqsim/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "liqsim/strategy.hpp"
#include "liqsim/varcalc.hpp"

namespace liqsim {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_text(const std::string& text, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << text;
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace

double scaling_limit_value(const LiquidationProblem& problem) {
    const double sa = problem.market.sigma * std::sqrt(problem.impact.a);
    return bachelier_value_u(problem.option, problem.market, problem.impact.a, 0.0,
                             problem.market.s0 - sa * problem.phi0) +
           0.5 * sa * problem.phi0 * problem.phi0;
}

SweepReport run_sweep(const ExperimentConfig& config, int n_threads) {
    const TimeGrid grid = TimeGrid::uniform(config.problem.market.horizon, config.n_steps);
    SweepReport report;
    report.limit_value = scaling_limit_value(config.problem);
    for (double lambda : config.lambda_sweep) {
        LiquidationProblem problem = config.problem;
        problem.impact.lambda = lambda;
        const CEEstimate ce =
            estimate_ce(problem, config.strategy, grid, config.n_paths, config.seed, n_threads);
        SweepRow row;
        row.lambda = lambda;
        row.ce_estimate = ce.value;
        row.stderr_proxy = ce.stderr_proxy;
        row.limit_value = report.limit_value;
        row.gap = std::abs(ce.value - report.limit_value);
        report.rows.push_back(row);
    }
    return report;
}

std::vector<VarTableRow> run_var_table(const VarTableConfig& config) {
    std::vector<VarTableRow> rows;
    for (double lambda : config.lambda_values)
        for (double x : config.x_values)
            for (double phi : config.phi_values)
                for (double t_end : config.t_end_values) {
                    VariationalProblem p;
                    p.lambda = lambda;
                    p.a = config.a;
                    p.sigma = config.sigma;
                    p.t_end = t_end;
                    p.x = x;
                    p.phi = phi;
                    VarTableRow row;
                    row.lambda = lambda;
                    row.x = x;
                    row.phi = phi;
                    row.t_end = t_end;
                    row.value_closed = xi_minimizer(p).value;
                    row.value_oracle = brute_force_value(p, config.n_grid);
                    row.gap = limit_gap(p);
                    row.gap_over_lambda = row.gap / lambda;
                    rows.push_back(row);
                }
    return rows;
}

std::string sweep_csv_text(const SweepReport& report) {
    std::string out = "# liqsim sweep v1: lambda,ce,stderr,limit_value,gap\n";
    out += "lambda,ce,stderr,limit_value,gap\n";
    for (const SweepRow& r : report.rows) {
        out += fmt(r.lambda) + "," + fmt(r.ce_estimate) + "," + fmt(r.stderr_proxy) + "," +
               fmt(r.limit_value) + "," + fmt(r.gap) + "\n";
    }
    return out;
}

std::string var_table_csv_text(const std::vector<VarTableRow>& rows) {
    std::string out =
        "# liqsim var-table v1: lambda,x,phi,t_end,value_closed,value_oracle,gap,gap_over_lambda\n";
    out += "lambda,x,phi,t_end,value_closed,value_oracle,gap,gap_over_lambda\n";
    for (const VarTableRow& r : rows) {
        out += fmt(r.lambda) + "," + fmt(r.x) + "," + fmt(r.phi) + "," + fmt(r.t_end) + "," +
               fmt(r.value_closed) + "," + fmt(r.value_oracle) + "," + fmt(r.gap) + "," +
               fmt(r.gap_over_lambda) + "\n";
    }
    return out;
}

void write_sweep_csv(const SweepReport& report, const std::string& path) {
    write_text(sweep_csv_text(report), path);
}

void write_var_table_csv(const std::vector<VarTableRow>& rows, const std::string& path) {
    write_text(var_table_csv_text(rows), path);
}

std::string trajectory_csv_text(const ExperimentConfig& config, std::uint64_t path_index) {
    LiquidationProblem problem = config.problem;
    problem.impact.lambda = config.lambda_sweep.front();
    const TimeGrid grid = TimeGrid::uniform(problem.market.horizon, config.n_steps);
    const Path path = simulate_path(problem.market, grid, config.seed, path_index);

    StrategyTrajectory traj;
    if (config.strategy == StrategyKind::BenchmarkSinh) {
        traj = benchmark_sinh_profile(problem.phi0, problem.impact.sqrt_rho(problem.market.sigma),
                                      grid);
    } else if (config.strategy == StrategyKind::None) {
        traj.grid = grid;
        const std::size_t m = static_cast<std::size_t>(grid.n_steps()) + 1;
        traj.f_vals.assign(m, 0.0);
        traj.phi_vals.assign(m, 0.0);
        traj.phi_rate.assign(m, 0.0);
        traj.upsilon.assign(m, 0.0);
    } else {
        traj = integrate_trajectory(problem, path);
    }

    std::string out = "# liqsim trajectory v1: t,S,F,Phi,PhiRate,Upsilon\n";
    out += "t,S,F,Phi,PhiRate,Upsilon\n";
    for (int k = 0; k <= grid.n_steps(); ++k) {
        const auto i = static_cast<std::size_t>(k);
        out += fmt(grid.time(k)) + "," + fmt(path.s[i]) + "," + fmt(traj.f_vals[i]) + "," +
               fmt(traj.phi_vals[i]) + "," + fmt(traj.phi_rate[i]) + "," + fmt(traj.upsilon[i]) +
               "\n";
    }
    return out;
}

void write_trajectory_csv(const ExperimentConfig& config, std::uint64_t path_index,
                          const std::string& path) {
    write_text(trajectory_csv_text(config, path_index), path);
}

}  // namespace liqsim
