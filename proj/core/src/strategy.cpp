#include "liqsim/strategy.hpp"

#include <cmath>
#include <stdexcept>

#include "liqsim/numerics.hpp"

namespace liqsim {

StrategyCoefficients StrategyCoefficients::build(const TimeGrid& grid, double sqrt_rho) {
    const int n = grid.n_steps();
    const double T = grid.horizon();
    StrategyCoefficients c;
    c.sqrt_rho = sqrt_rho;
    c.theta.resize(static_cast<std::size_t>(n) + 1);
    c.tanh_theta.resize(static_cast<std::size_t>(n) + 1);
    c.tanh_half.resize(static_cast<std::size_t>(n) + 1);
    c.sech2_half.resize(static_cast<std::size_t>(n) + 1);
    c.decay.resize(static_cast<std::size_t>(n));
    c.kick.resize(static_cast<std::size_t>(n));
    for (int k = 0; k <= n; ++k) {
        const double th = sqrt_rho * (T - grid.time(k));
        const auto i = static_cast<std::size_t>(k);
        c.theta[i] = th;
        c.tanh_theta[i] = tanh_stable(th);
        c.tanh_half[i] = tanh_stable(0.5 * th);
        c.sech2_half[i] = liqsim::sech2_half(th);
    }
    for (int k = 0; k < n; ++k) {
        const auto i = static_cast<std::size_t>(k);
        const double a = c.theta[i + 1];  // theta_{k+1} <= theta_k = b
        const double b = c.theta[i];
        const double d = b - a;  // sqrt(rho) * dt up to grid rounding
        c.decay[i] = cosh_ratio(a, b);
        // cosh(a) (tanh(b/2) - tanh(a/2)) = (1 - e^{-d})(1 + e^{-2a}) /
        //                                   ((1 + e^{-b})(1 + e^{-a}))
        c.kick[i] = (-std::expm1(-d)) * (1.0 + std::exp(-2.0 * a)) /
                    ((1.0 + std::exp(-b)) * (1.0 + std::exp(-a)));
    }
    return c;
}

double initial_f(double phi0, double rho, double horizon) {
    if (!(rho > 0.0)) throw std::invalid_argument("initial_f: rho must be > 0");
    if (!(horizon > 0.0)) throw std::invalid_argument("initial_f: horizon must be > 0");
    return phi0 * coth_stable(std::sqrt(rho) * horizon);
}

StrategyTrajectory integrate_trajectory(const LiquidationProblem& problem, const Path& path,
                                        IntegratorKind kind) {
    const TimeGrid& grid = path.grid;
    if (grid.horizon() != problem.market.horizon)
        throw std::invalid_argument("integrate_trajectory: path grid does not match problem horizon");

    const int n = grid.n_steps();
    const double sigma = problem.market.sigma;
    const double sqrt_rho = problem.impact.sqrt_rho(sigma);
    const double shift = sigma * std::sqrt(problem.impact.a);
    const bool has_option = problem.option.theta != 0.0;
    const StrategyCoefficients c = StrategyCoefficients::build(grid, sqrt_rho);

    StrategyTrajectory out;
    out.grid = grid;
    out.f_vals.resize(static_cast<std::size_t>(n) + 1);
    out.phi_vals.resize(static_cast<std::size_t>(n) + 1);
    out.upsilon.resize(static_cast<std::size_t>(n) + 1);

    double f = initial_f(problem.phi0, problem.impact.rho(sigma), grid.horizon());
    for (int k = 0; k < n; ++k) {
        const auto i = static_cast<std::size_t>(k);
        const double ups = has_option
                               ? delta_ux(problem.option, problem.market, problem.impact.a,
                                          grid.time(k), path.s[i] - shift * f)
                               : 0.0;
        out.f_vals[i] = f;
        out.phi_vals[i] = c.tanh_theta[i] * f;
        out.upsilon[i] = ups;
        if (kind == IntegratorKind::Exponential) {
            f = c.decay[i] * f + ups * c.kick[i];
        } else {
            const double cfun = 1.0 - 0.5 * c.sech2_half[i];
            f += grid.dt() * sqrt_rho * (cfun * ups - c.tanh_theta[i] * f);
        }
    }
    const auto last = static_cast<std::size_t>(n);
    out.f_vals[last] = f;
    out.phi_vals[last] = c.tanh_theta[last] * f;  // tanh(0) = 0 exactly
    out.upsilon[last] = n > 0 ? out.upsilon[last - 1] : 0.0;

    out.phi_rate = phi_rate(out, problem.impact, problem.market);
    return out;
}

std::vector<double> phi_rate(const StrategyTrajectory& trajectory, const ImpactParams& impact,
                             const MarketParams& market) {
    const int n = trajectory.grid.n_steps();
    const double sqrt_rho = impact.sqrt_rho(market.sigma);
    const double T = trajectory.grid.horizon();
    std::vector<double> rate(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        const auto i = static_cast<std::size_t>(k);
        const double th = sqrt_rho * (T - trajectory.grid.time(k));
        rate[i] = sqrt_rho * (tanh_stable(0.5 * th) * trajectory.upsilon[i] - trajectory.f_vals[i]);
    }
    return rate;
}

StrategyTrajectory benchmark_sinh_profile(double phi0, double kappa, const TimeGrid& grid) {
    if (!(kappa > 0.0)) throw std::invalid_argument("benchmark_sinh_profile: kappa must be > 0");
    const int n = grid.n_steps();
    const double T = grid.horizon();
    StrategyTrajectory out;
    out.grid = grid;
    out.f_vals.resize(static_cast<std::size_t>(n) + 1);
    out.phi_vals.resize(static_cast<std::size_t>(n) + 1);
    out.phi_rate.resize(static_cast<std::size_t>(n) + 1);
    out.upsilon.assign(static_cast<std::size_t>(n) + 1, 0.0);
    for (int k = 0; k <= n; ++k) {
        const auto i = static_cast<std::size_t>(k);
        const double th = kappa * (T - grid.time(k));
        const double f = phi0 * std::exp(th - kappa * T) * (1.0 + std::exp(-2.0 * th)) /
                         (-std::expm1(-2.0 * kappa * T));  // phi0 cosh(th)/sinh(kappa T)
        out.f_vals[i] = f;
        out.phi_vals[i] = phi0 * sinh_ratio(th, kappa * T);
        out.phi_rate[i] = -kappa * f;
    }
    out.phi_vals[static_cast<std::size_t>(n)] = 0.0;
    return out;
}

}  // namespace liqsim
