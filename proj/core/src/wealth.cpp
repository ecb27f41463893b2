#include "liqsim/wealth.hpp"

#include <cmath>
#include <stdexcept>

namespace liqsim {

WealthBreakdown compute_wealth(const Path& path, const StrategyTrajectory& trajectory,
                               const LiquidationProblem& problem) {
    const int n = path.grid.n_steps();
    if (trajectory.grid.n_steps() != n || trajectory.grid.horizon() != path.grid.horizon())
        throw std::invalid_argument("compute_wealth: path and trajectory grids differ");

    const double dt = path.grid.dt();
    const double half_lambda = 0.5 * problem.impact.lambda;

    WealthBreakdown out;
    out.running_v.resize(static_cast<std::size_t>(n) + 1);
    double pnl = 0.0;
    double cost = 0.0;
    out.running_v[0] = 0.0;
    for (int k = 0; k < n; ++k) {
        const auto i = static_cast<std::size_t>(k);
        pnl += trajectory.phi_vals[i] * (path.s[i + 1] - path.s[i]);
        cost += half_lambda * trajectory.phi_rate[i] * trajectory.phi_rate[i] * dt;
        out.running_v[i + 1] = pnl - cost;
    }
    out.trading_pnl = pnl;
    out.impact_cost = cost;
    out.v_terminal = pnl - cost;
    out.payoff_x = payoff_f(problem.option, path.s[static_cast<std::size_t>(n)]);
    out.exponent = problem.impact.alpha() * (out.payoff_x - out.v_terminal);
    return out;
}

MartingaleDiagnostic martingale_diagnostic(const Path& path, const StrategyTrajectory& trajectory,
                                           const WealthBreakdown& wealth,
                                           const LiquidationProblem& problem) {
    const int n = path.grid.n_steps();
    const double alpha = problem.impact.alpha();
    const double sigma = problem.market.sigma;
    const double shift = sigma * std::sqrt(problem.impact.a);
    const double dt = path.grid.dt();

    MartingaleDiagnostic out;
    out.log_m.resize(static_cast<std::size_t>(n) + 1);
    out.c_series.resize(static_cast<std::size_t>(n) + 1);
    out.residuals.resize(static_cast<std::size_t>(n));
    for (int k = 0; k <= n; ++k) {
        const auto i = static_cast<std::size_t>(k);
        const double f = trajectory.f_vals[i];
        const double u = bachelier_value_u(problem.option, problem.market, problem.impact.a,
                                           path.grid.time(k), path.s[i] - shift * f);
        out.log_m[i] = alpha * (u + 0.5 * shift * f * trajectory.phi_vals[i] - wealth.running_v[i]);
        out.c_series[i] = alpha * (trajectory.upsilon[i] - trajectory.phi_vals[i]);
    }
    for (int k = 0; k < n; ++k) {
        const auto i = static_cast<std::size_t>(k);
        const double c = out.c_series[i];
        out.residuals[i] = out.log_m[i + 1] - out.log_m[i] - c * (path.s[i + 1] - path.s[i]) +
                           0.5 * c * c * sigma * sigma * dt;
    }
    out.n0 = std::exp(out.log_m[0]);
    return out;
}

}  // namespace liqsim
