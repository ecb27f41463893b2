#include "liqsim/validate.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "liqsim/mc.hpp"
#include "liqsim/model.hpp"
#include "liqsim/numerics.hpp"
#include "liqsim/strategy.hpp"
#include "liqsim/varcalc.hpp"
#include "liqsim/wealth.hpp"

namespace liqsim {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// The call configuration used throughout the strategy/wealth checks.
LiquidationProblem call_problem() {
    LiquidationProblem p;
    p.market = MarketParams{0.0, 0.0, 0.2, 1.0};
    p.impact = ImpactParams{0.1, 1.0};
    p.option = OptionSpec{1.0, 0.0};
    p.phi0 = 0.5;
    return p;
}

void check_g_dominates_f(std::vector<CheckResult>& out) {
    double worst = 1e300;
    for (double theta : {1.0, -2.0, 0.5}) {
        const OptionSpec opt{theta, 0.3};
        for (int i = 0; i < 1000; ++i) {
            const double x = -5.0 + 10.0 * i / 999.0;
            const double diff = modified_payoff_g(opt, 0.7, 0.9, x) - payoff_f(opt, x);
            worst = std::min(worst, diff);
        }
    }
    out.push_back({"model.g_dominates_f", worst >= 0.0, worst, 0.0, ""});
}

void check_pde_residual(std::vector<CheckResult>& out) {
    const LiquidationProblem p = call_problem();
    const double h = 1e-4;
    double worst = 0.0;
    for (int it = 0; it < 20; ++it) {
        const double t = 0.01 + (0.9 - 0.01) * it / 19.0;
        for (int ix = 0; ix < 20; ++ix) {
            const double x = -1.0 + 2.0 * ix / 19.0;
            const auto u = [&](double tt, double xx) {
                return bachelier_value_u(p.option, p.market, p.impact.a, tt, xx);
            };
            const double ut = (u(t + h, x) - u(t - h, x)) / (2.0 * h);
            const double uxx = (u(t, x + h) - 2.0 * u(t, x) + u(t, x - h)) / (h * h);
            worst = std::max(worst, std::abs(ut + 0.5 * p.market.sigma * p.market.sigma * uxx));
        }
    }
    out.push_back({"model.pde_residual", worst <= 1e-4, worst, 1e-4, ""});
}

void check_u_shape(std::vector<CheckResult>& out) {
    const LiquidationProblem p = call_problem();
    const double h = 1e-3;
    double worst = 1e300;
    for (int it = 0; it < 20; ++it) {
        const double t = 0.0 + 0.9 * it / 19.0;
        for (int ix = 0; ix < 20; ++ix) {
            const double x = -1.0 + 2.0 * ix / 19.0;
            const auto u = [&](double xx) {
                return bachelier_value_u(p.option, p.market, p.impact.a, t, xx);
            };
            const double second = (u(x + h) - 2.0 * u(x) + u(x - h)) / (h * h);
            const double first = (u(x + h) - u(x)) / h;
            worst = std::min(worst, std::min(second, first));
        }
    }
    out.push_back({"model.u_convex_nondecreasing", worst >= -1e-8, worst, -1e-8, ""});
}

void check_delta_fd(std::vector<CheckResult>& out) {
    const LiquidationProblem p = call_problem();
    const double h = 1e-5;
    double worst = 0.0;
    for (int it = 0; it < 20; ++it) {
        const double t = 0.0 + 0.9 * it / 19.0;
        for (int ix = 0; ix < 20; ++ix) {
            const double x = -1.0 + 2.0 * ix / 19.0;
            const double fd = (bachelier_value_u(p.option, p.market, p.impact.a, t, x + h) -
                               bachelier_value_u(p.option, p.market, p.impact.a, t, x - h)) /
                              (2.0 * h);
            worst = std::max(worst,
                             std::abs(fd - delta_ux(p.option, p.market, p.impact.a, t, x)));
        }
    }
    out.push_back({"model.delta_matches_fd", worst <= 1e-6, worst, 1e-6, ""});
}

void check_path_moments(std::vector<CheckResult>& out, int n_paths) {
    const MarketParams market{0.0, 0.3, 0.7, 2.0};
    const TimeGrid grid = TimeGrid::uniform(market.horizon, 16);
    const auto paths = simulate_paths(market, grid, n_paths, 91);
    double mean = 0.0;
    for (const Path& p : paths) mean += p.w.back();
    mean /= n_paths;
    double var = 0.0;
    for (const Path& p : paths) var += (p.w.back() - mean) * (p.w.back() - mean);
    var /= (n_paths - 1);
    const double t_final = market.horizon;
    const double mean_bound = 4.0 * std::sqrt(t_final / n_paths);
    const bool ok = std::abs(mean) <= mean_bound && std::abs(var - t_final) <= 0.05 * t_final;
    out.push_back({"model.path_moments", ok, std::abs(mean), mean_bound,
                   "var=" + num(var) + " target=" + num(t_final) + " +-5%"});
}

void check_path_determinism(std::vector<CheckResult>& out) {
    const MarketParams market{1.0, 0.1, 0.4, 1.0};
    const TimeGrid grid = TimeGrid::uniform(market.horizon, 64);
    const Path a = simulate_path(market, grid, 7, 3);
    const Path b = simulate_paths(market, grid, 5, 7)[3];
    bool same = true;
    double recon = 0.0;
    for (std::size_t k = 0; k < a.w.size(); ++k) {
        same = same && a.w[k] == b.w[k] && a.s[k] == b.s[k];
        const double expect =
            market.s0 + market.mu * grid.time(static_cast<int>(k)) + market.sigma * a.w[k];
        recon = std::max(recon, std::abs(a.s[k] - expect));
    }
    out.push_back({"model.path_determinism", same && recon == 0.0, recon, 0.0, ""});
}

struct PathBundle {
    Path path;
    StrategyTrajectory traj;
    WealthBreakdown wealth;
};

PathBundle make_bundle(const LiquidationProblem& p, const TimeGrid& grid, std::uint64_t seed,
                       std::uint64_t index, IntegratorKind kind = IntegratorKind::Exponential) {
    PathBundle b;
    b.path = simulate_path(p.market, grid, seed, index);
    b.traj = integrate_trajectory(p, b.path, kind);
    b.wealth = compute_wealth(b.path, b.traj, p);
    return b;
}

// Left-point integrals entering the Step II identity.
struct StepTwoSums {
    double int_phi = 0.0;
    double int_ups = 0.0;
    double int_ups_sech = 0.0;
};

StepTwoSums step_two_sums(const LiquidationProblem& p, const StrategyTrajectory& traj) {
    StepTwoSums s;
    const TimeGrid& grid = traj.grid;
    const double sr = p.impact.sqrt_rho(p.market.sigma);
    for (int k = 0; k < grid.n_steps(); ++k) {
        const auto i = static_cast<std::size_t>(k);
        const double th = sr * (grid.horizon() - grid.time(k));
        s.int_phi += traj.phi_vals[i] * grid.dt();
        s.int_ups += traj.upsilon[i] * grid.dt();
        s.int_ups_sech += traj.upsilon[i] * sech2_half(th) * grid.dt();
    }
    return s;
}

double step_two_residual(const LiquidationProblem& p, const StrategyTrajectory& traj) {
    const double sr = p.impact.sqrt_rho(p.market.sigma);
    const double t_final = traj.grid.horizon();
    const StepTwoSums s = step_two_sums(p, traj);
    const double rhs = p.phi0 * tanh_stable(0.5 * sr * t_final) / sr - s.int_ups_sech;
    return std::abs(s.int_phi - s.int_ups - rhs);
}

void check_strategy_paths(std::vector<CheckResult>& out, int n_paths) {
    const LiquidationProblem p = call_problem();
    const TimeGrid grid = TimeGrid::uniform(p.market.horizon, 1000);
    const double sr = p.impact.sqrt_rho(p.market.sigma);
    const double t_final = p.market.horizon;
    const double f_bound =
        std::abs(p.phi0) * csch_stable(sr * t_final) + std::abs(p.option.theta) + 1e-6;
    const double step2_bound = (std::abs(p.phi0) + 2.0 * std::abs(p.option.theta)) *
                                   p.impact.lambda / (p.market.sigma * std::sqrt(p.impact.a)) +
                               5.0 * grid.dt();

    double worst_phi_t = 0.0, worst_f = 0.0, worst_resid = 0.0, worst_int = 0.0;
    double worst_chain = 1e300, worst_dom = 1e300;
    const double sinh_term = p.market.sigma * std::sqrt(p.impact.a) *
                             std::abs(p.phi0 * p.option.theta) * csch_stable(sr * t_final);
    for (int i = 0; i < n_paths; ++i) {
        const PathBundle b = make_bundle(p, grid, 11, static_cast<std::uint64_t>(i));
        worst_phi_t = std::max(worst_phi_t, std::abs(b.traj.phi_vals.back()));
        worst_f = std::max(worst_f, std::abs(b.traj.f_vals.back()));
        worst_resid = std::max(worst_resid, step_two_residual(p, b.traj));
        const StepTwoSums s = step_two_sums(p, b.traj);
        worst_int = std::max(worst_int, std::abs(s.int_ups - s.int_phi));

        // Step III chain at the terminal node and Step I payoff domination.
        const double shift = p.market.sigma * std::sqrt(p.impact.a);
        const double g_term = modified_payoff_g(p.option, p.market.sigma, p.impact.a,
                                                b.path.s.back() - shift * b.traj.f_vals.back());
        const double log_m_t = p.impact.alpha() * (g_term - b.wealth.v_terminal);
        const double lam_over_a = 1.0 / p.impact.alpha();
        worst_chain = std::min(worst_chain, lam_over_a * log_m_t + sinh_term -
                                                lam_over_a * b.wealth.exponent);
        worst_dom = std::min(worst_dom, g_term - (b.wealth.payoff_x - sinh_term));
    }
    out.push_back({"strategy.terminal_liquidation", worst_phi_t == 0.0, worst_phi_t, 0.0, ""});
    out.push_back({"strategy.step1_terminal_bound", worst_f <= f_bound, worst_f, f_bound, ""});
    out.push_back({"strategy.step2_identity", worst_resid <= 5.0 * grid.dt(), worst_resid,
                   5.0 * grid.dt(), ""});
    out.push_back({"strategy.step2_bound", worst_int <= step2_bound, worst_int, step2_bound, ""});
    out.push_back({"wealth.step3_chain", worst_chain >= -1e-9, worst_chain, -1e-9, ""});
    out.push_back({"wealth.step1_domination", worst_dom >= -1e-9, worst_dom, -1e-9, ""});
}

void check_theta0_matches_sinh(std::vector<CheckResult>& out) {
    double worst = 0.0;
    for (double sr_t : {1.0, 10.0, 1000.0}) {
        LiquidationProblem p = call_problem();
        p.option.theta = 0.0;
        p.phi0 = 0.8;
        p.impact.a = 1.0;
        p.impact.lambda = p.market.sigma * std::sqrt(p.impact.a) * p.market.horizon / sr_t;
        const TimeGrid grid = TimeGrid::uniform(p.market.horizon, 500);
        const Path path = simulate_path(p.market, grid, 3, 0);
        const StrategyTrajectory traj = integrate_trajectory(p, path);
        const StrategyTrajectory prof =
            benchmark_sinh_profile(p.phi0, p.impact.sqrt_rho(p.market.sigma), grid);
        for (std::size_t k = 0; k < traj.phi_vals.size(); ++k) {
            if (std::abs(prof.phi_vals[k]) < 1e-280) {
                if (std::abs(traj.phi_vals[k]) >= 1e-280) worst = std::max(worst, 1.0);
                continue;
            }
            worst = std::max(worst, std::abs(traj.phi_vals[k] - prof.phi_vals[k]) /
                                        std::abs(prof.phi_vals[k]));
        }
    }
    out.push_back({"strategy.theta0_matches_sinh", worst <= 1e-10, worst, 1e-10, ""});
}

void check_negative_control(std::vector<CheckResult>& out) {
    // Explicit Euler injected at a stiff rho must break the Step II identity.
    LiquidationProblem p = call_problem();
    p.impact.lambda = 5e-5;  // sqrt(rho) = 4000 with sigma = 0.2, A = 1
    const TimeGrid grid = TimeGrid::uniform(p.market.horizon, 100);
    const Path path = simulate_path(p.market, grid, 17, 0);
    const StrategyTrajectory t_euler = integrate_trajectory(p, path, IntegratorKind::ExplicitEuler);
    const StrategyTrajectory t_exp = integrate_trajectory(p, path, IntegratorKind::Exponential);
    const double resid_euler = step_two_residual(p, t_euler);
    const double resid_exp = step_two_residual(p, t_exp);
    const double bound = 5.0 * grid.dt();
    const bool tamper_detected = !(resid_euler <= bound) && resid_exp <= bound;
    out.push_back({"strategy.negative_control_euler", tamper_detected, resid_euler, bound,
                   "exponential scheme residual=" + num(resid_exp)});
}

void check_wealth_decomposition(std::vector<CheckResult>& out) {
    const LiquidationProblem p = call_problem();
    const TimeGrid grid = TimeGrid::uniform(p.market.horizon, 300);
    double worst = 0.0;
    bool exact = true;
    for (int i = 0; i < 25; ++i) {
        const PathBundle b = make_bundle(p, grid, 23, static_cast<std::uint64_t>(i));
        exact = exact && b.wealth.v_terminal == b.wealth.trading_pnl - b.wealth.impact_cost &&
                b.wealth.running_v.back() == b.wealth.v_terminal;
        worst = std::max(worst, std::abs(b.wealth.v_terminal -
                                         (b.wealth.trading_pnl - b.wealth.impact_cost)));
    }
    out.push_back({"wealth.decomposition_exact", exact, worst, 0.0, ""});
}

void check_martingale_flat(std::vector<CheckResult>& out) {
    LiquidationProblem p = call_problem();
    p.option.theta = 0.0;
    p.phi0 = 0.0;
    const TimeGrid grid = TimeGrid::uniform(p.market.horizon, 200);
    const PathBundle b = make_bundle(p, grid, 29, 0);
    const MartingaleDiagnostic d = martingale_diagnostic(b.path, b.traj, b.wealth, p);
    double worst = 0.0;
    for (double lm : d.log_m) worst = std::max(worst, std::abs(lm));
    for (double r : d.residuals) worst = std::max(worst, std::abs(r));
    out.push_back({"wealth.theta0_flat", worst == 0.0, worst, 0.0, ""});
}

void check_supermartingale(std::vector<CheckResult>& out, int n_paths) {
    const LiquidationProblem p = call_problem();  // mu = 0
    const TimeGrid grid = TimeGrid::uniform(p.market.horizon, 1000);
    double sum = 0.0, sum_sq = 0.0, n0 = 0.0;
    for (int i = 0; i < n_paths; ++i) {
        const PathBundle b = make_bundle(p, grid, 31, static_cast<std::uint64_t>(i));
        const MartingaleDiagnostic d = martingale_diagnostic(b.path, b.traj, b.wealth, p);
        const double n_t = std::exp(d.log_m.back());
        sum += n_t;
        sum_sq += n_t * n_t;
        n0 = d.n0;
    }
    const double mean = sum / n_paths;
    const double var = (sum_sq - n_paths * mean * mean) / (n_paths - 1);
    const double se = std::sqrt(var / n_paths);
    const double bound = n0 + 3.0 * se;
    out.push_back({"wealth.supermartingale_mean", mean <= bound, mean, bound,
                   "N0=" + num(n0) + " se=" + num(se)});
}

void check_mc_determinism(std::vector<CheckResult>& out, int n_paths) {
    const LiquidationProblem p = call_problem();
    const TimeGrid grid = TimeGrid::uniform(p.market.horizon, 200);
    const CEEstimate a = estimate_ce(p, StrategyKind::Asymptotic, grid, n_paths, 41, 1);
    const CEEstimate b = estimate_ce(p, StrategyKind::Asymptotic, grid, n_paths, 41, 3);
    const CEEstimate c = estimate_ce(p, StrategyKind::Asymptotic, grid, n_paths, 41, 1);
    const bool same = a.value == b.value && a.value == c.value &&
                      a.stderr_proxy == b.stderr_proxy && a.max_exponent == b.max_exponent;
    out.push_back({"mc.determinism_across_threads", same, std::abs(a.value - b.value), 0.0, ""});
}

void check_mc_shift(std::vector<CheckResult>& out) {
    const LiquidationProblem p = call_problem();
    const TimeGrid grid = TimeGrid::uniform(p.market.horizon, 200);
    const double alpha = p.impact.alpha();
    std::vector<double> exponents(500);
    for (std::size_t i = 0; i < exponents.size(); ++i)
        exponents[i] = path_exponent(p, StrategyKind::Asymptotic, grid, 43, i);
    const double base = reduce_exponents(exponents, alpha).value;
    const double b_shift = 0.37;
    for (double& e : exponents) e += alpha * b_shift;
    const double shifted = reduce_exponents(exponents, alpha).value;
    const double err = std::abs(shifted - base - b_shift);
    out.push_back({"mc.payoff_shift_invariance", err <= 1e-12, err, 1e-12, ""});
}

void check_mc_vs_closed_form(std::vector<CheckResult>& out, int n_paths) {
    LiquidationProblem p;
    p.market = MarketParams{0.0, 0.0, 1.0, 1.0};
    p.impact = ImpactParams{0.5, 1.0};
    p.option = OptionSpec{0.0, 0.0};
    p.phi0 = 1.0;
    const TimeGrid grid = TimeGrid::uniform(p.market.horizon, 1000);
    const double closed = schied_schoneborn_ce(p.phi0, p.impact.alpha(), p.impact.lambda,
                                               p.market.sigma, p.market.horizon);

    const CEEstimate bench = estimate_ce(p, StrategyKind::BenchmarkSinh, grid, n_paths, 47);
    const double tol = std::max(3.0 * bench.stderr_proxy, 5e-3) + 2.0 * grid.dt();
    out.push_back({"mc.ce_matches_closed_form", std::abs(bench.value - closed) <= tol,
                   std::abs(bench.value - closed), tol, "closed=" + num(closed)});

    // The infimum definition: any admissible strategy's CE dominates the
    // optimal deterministic one (theta = 0, mu = 0).
    const CEEstimate asym = estimate_ce(p, StrategyKind::Asymptotic, grid, n_paths, 47);
    const double slack = asym.value - closed + 3.0 * asym.stderr_proxy + 2.0 * grid.dt();
    out.push_back({"mc.ce_upper_bounds_infimum", slack >= 0.0, slack, 0.0, ""});
}

void check_price_theta0(std::vector<CheckResult>& out) {
    LiquidationProblem p = call_problem();
    p.option.theta = 0.0;
    const TimeGrid grid = TimeGrid::uniform(p.market.horizon, 200);
    const PriceEstimate pe = estimate_indifference_price(p, grid, 500, 53);
    out.push_back({"mc.price_theta0_zero", pe.pi == 0.0, std::abs(pe.pi), 0.0, ""});
}

// Composite Simpson of f over [0, t_end].
template <typename F>
double simpson(F&& f, double t_end, int n) {
    if (n % 2) ++n;
    const double h = t_end / n;
    double acc = f(0.0) + f(t_end);
    for (int i = 1; i < n; ++i) acc += f(i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

void check_varcalc_stage1_identity(std::vector<CheckResult>& out) {
    double worst = 0.0;
    for (double lambda : {0.5, 0.2, 0.1}) {
        VariationalProblem p;
        p.lambda = lambda;
        p.a = 1.0;
        p.sigma = 1.0;
        p.t_end = 1.0;
        p.x = 1.0;
        p.phi = 0.5;
        const VariationalSolution s = xi_minimizer(p);
        const double rho = 1.0 / (lambda * lambda);
        const double sr = std::sqrt(rho);
        const double quad = simpson(
            [&](double t) {
                const double d = s.minimizer(t);
                const double dd = s.minimizer_deriv(t);
                return rho * d * d + dd * dd;
            },
            p.t_end, 8000);
        const double th = sr * p.t_end;
        const double th2 = tanh_stable(0.5 * th);
        const double denom = th - 2.0 * th2;
        const double w = p.x * th2 - sr * s.y;
        const double closed = sr * (p.x * p.x * coth_stable(th) + w * w / denom);
        worst = std::max(worst, std::abs(quad - closed) / std::abs(closed));
    }
    out.push_back({"varcalc.stage1_identity", worst <= 1e-6, worst, 1e-6, ""});
}

void check_varcalc_constraints(std::vector<CheckResult>& out) {
    std::mt19937_64 gen(59);
    std::uniform_real_distribution<double> ul(0.05, 0.9), ux(-2.0, 2.0), up(-1.5, 1.5);
    double worst = 0.0;
    for (int it = 0; it < 20; ++it) {
        VariationalProblem p;
        p.lambda = ul(gen);
        p.a = 1.0;
        p.sigma = 1.0;
        p.t_end = 1.0;
        p.x = ux(gen);
        p.phi = up(gen);
        const VariationalSolution s = xi_minimizer(p);
        const double integral = simpson([&](double t) { return s.minimizer(t); }, p.t_end, 4000);
        const double scale = std::max({1.0, std::abs(p.x), std::abs(s.y)});
        worst = std::max(worst, std::abs(s.minimizer(0.0)) / scale);
        worst = std::max(worst, std::abs(s.minimizer(p.t_end) - p.x) / scale);
        worst = std::max(worst, std::abs(integral - s.y) / scale);
    }
    out.push_back({"varcalc.constraints_hold", worst <= 1e-9, worst, 1e-9, ""});
}

double variational_objective(const VariationalProblem& p, const VariationalSolution& s,
                             double bump_amp, int bump_mode) {
    const double pi = 3.14159265358979323846;
    const auto delta = [&](double t) {
        return s.minimizer(t) + bump_amp * std::sin(bump_mode * pi * t / p.t_end);
    };
    const auto ddelta = [&](double t) {
        return s.minimizer_deriv(t) +
               bump_amp * bump_mode * pi / p.t_end * std::cos(bump_mode * pi * t / p.t_end);
    };
    const double int_d2 = simpson([&](double t) { const double d = delta(t); return d * d; },
                                  p.t_end, 4000);
    const double int_dd2 = simpson([&](double t) { const double d = ddelta(t); return d * d; },
                                   p.t_end, 4000);
    const double int_d = simpson(delta, p.t_end, 4000);
    const double resid = p.phi * p.lambda - int_d;
    return p.lambda / (2.0 * p.sigma * p.sigma * p.a) * int_dd2 +
           1.0 / (2.0 * p.lambda) * (int_d2 - resid * resid / p.t_end);
}

void check_varcalc_uniqueness(std::vector<CheckResult>& out) {
    VariationalProblem p;
    p.lambda = 0.2;
    p.a = 1.0;
    p.sigma = 1.0;
    p.t_end = 1.0;
    p.x = 1.0;
    p.phi = 0.5;
    const VariationalSolution s = xi_minimizer(p);
    const double base = variational_objective(p, s, 0.0, 1);
    std::mt19937_64 gen(61);
    std::uniform_real_distribution<double> amp(0.02, 0.4);
    std::uniform_int_distribution<int> mode(1, 6);
    std::bernoulli_distribution sign(0.5);
    double worst = 1e300;
    for (int i = 0; i < 50; ++i) {
        const double a = amp(gen) * (sign(gen) ? 1.0 : -1.0);
        worst = std::min(worst, variational_objective(p, s, a, mode(gen)) - base);
    }
    out.push_back({"varcalc.uniqueness_probe", worst > 0.0, worst, 0.0, ""});
}

void check_varcalc_vertex(std::vector<CheckResult>& out) {
    VariationalProblem p;
    p.lambda = 0.15;
    p.a = 1.0;
    p.sigma = 1.0;
    p.t_end = 1.0;
    p.x = 1.2;
    p.phi = -0.6;
    const VariationalSolution s = xi_minimizer(p);

    const double sr = p.sigma * std::sqrt(p.a) / p.lambda;
    const double th = sr * p.t_end;
    const double th2 = tanh_stable(0.5 * th);
    const double denom = th - 2.0 * th2;
    const double sa = p.sigma * std::sqrt(p.a);
    const auto value_at = [&](double y) {
        const double w = p.x * th2 - sr * y;
        const double resid = p.phi * p.lambda - y;
        return (p.x * p.x * coth_stable(th) + w * w / denom) / (2.0 * sa) -
               resid * resid / (2.0 * p.lambda * p.t_end);
    };
    const double step = 1.0;
    const double f0 = value_at(0.0), fp = value_at(step), fm = value_at(-step);
    const double vertex = -step * (fp - fm) / (2.0 * (fp - 2.0 * f0 + fm));
    const double rel = std::abs(vertex - s.y) / std::max(1e-30, std::abs(s.y));
    out.push_back({"varcalc.vertex_matches_sol2", rel <= 1e-8, rel, 1e-8, ""});
}

void check_varcalc_oracle(std::vector<CheckResult>& out, ValidateLevel level) {
    std::vector<VariationalProblem> lattice;
    if (level == ValidateLevel::Fast) {
        for (double lambda : {0.5, 0.02})
            for (double x : {-1.0, 1.3})
                for (double phi : {0.0, 0.7}) {
                    VariationalProblem p;
                    p.lambda = lambda;
                    p.x = x;
                    p.phi = phi;
                    p.t_end = 1.0;
                    lattice.push_back(p);
                }
    } else {
        for (double lambda : {0.5, 0.1, 0.02})
            for (double x : {-1.0, 0.0, 1.3})
                for (double phi : {0.0, 0.7})
                    for (double t_end : {0.25, 1.0}) {
                        VariationalProblem p;
                        p.lambda = lambda;
                        p.x = x;
                        p.phi = phi;
                        p.t_end = t_end;
                        lattice.push_back(p);
                    }
    }
    double worst = 0.0;
    for (const VariationalProblem& p : lattice) {
        const double closed = xi_minimizer(p).value;
        const double oracle = brute_force_value(p, 2000);
        worst = std::max(worst, std::abs(closed - oracle) / std::max(1.0, std::abs(oracle)));
    }
    out.push_back({"varcalc.closed_vs_oracle", worst <= 1e-3, worst, 1e-3,
                   num(static_cast<double>(lattice.size())) + " lattice points, n_grid=2000"});
}

void check_varcalc_rate_table(std::vector<CheckResult>& out) {
    // Vanishing-impact gap table; the ledger bound is gap <= C_hat * Lambda
    // with C_hat calibrated at Lambda = 0.2.
    VariationalProblem p;
    p.a = 1.0;
    p.sigma = 1.0;
    p.t_end = 1.0;
    p.x = 1.0;
    p.phi = 0.5;
    std::string table = "lambda,gap,gap_over_lambda\n";
    p.lambda = 0.2;
    const double c_hat = 2.0 * limit_gap(p) / 0.2;
    bool ok = true;
    double worst = 0.0;
    for (double lambda : {0.2, 0.1, 0.05, 0.025}) {
        p.lambda = lambda;
        const double gap = limit_gap(p);
        table += num(lambda) + "," + num(gap) + "," + num(gap / lambda) + "\n";
        ok = ok && gap <= c_hat * lambda;
        worst = std::max(worst, gap / lambda);
    }
    out.push_back({"varcalc.rate_table_gap_le_C_lambda", ok, worst, c_hat, table});
}

}  // namespace

bool ValidateReport::all_passed() const {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

int ValidateReport::n_failed() const {
    int n = 0;
    for (const CheckResult& c : checks)
        if (!c.pass) ++n;
    return n;
}

ValidateReport run_validate(ValidateLevel level) {
    const int mc_paths = level == ValidateLevel::Fast ? 10000 : 100000;
    ValidateReport report;
    auto& out = report.checks;

    check_g_dominates_f(out);
    check_pde_residual(out);
    check_u_shape(out);
    check_delta_fd(out);
    check_path_moments(out, mc_paths);
    check_path_determinism(out);

    check_strategy_paths(out, level == ValidateLevel::Fast ? 200 : 1000);
    check_theta0_matches_sinh(out);
    check_negative_control(out);

    check_wealth_decomposition(out);
    check_martingale_flat(out);
    check_supermartingale(out, 10000);

    check_mc_determinism(out, 2000);
    check_mc_shift(out);
    check_mc_vs_closed_form(out, mc_paths);
    check_price_theta0(out);

    check_varcalc_stage1_identity(out);
    check_varcalc_constraints(out);
    check_varcalc_uniqueness(out);
    check_varcalc_vertex(out);
    check_varcalc_oracle(out, level);
    if (level == ValidateLevel::Full) check_varcalc_rate_table(out);

    return report;
}

std::string format_report(const ValidateReport& report) {
    std::string out;
    for (const CheckResult& c : report.checks) {
        out += c.pass ? "[PASS] " : "[FAIL] ";
        out += c.name + ": measured=" + num(c.measured) + " bound=" + num(c.bound);
        if (!c.detail.empty()) out += "  (" + c.detail + ")";
        out += "\n";
    }
    out += report.all_passed()
               ? "all checks passed\n"
               : std::to_string(report.n_failed()) + " check(s) failed\n";
    return out;
}

}  // namespace liqsim
