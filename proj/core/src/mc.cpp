#include "liqsim/mc.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "liqsim/numerics.hpp"
#include "liqsim/rng.hpp"
#include "liqsim/strategy.hpp"

namespace liqsim {

namespace {

// Shared per-estimate setup: scheme coefficients for the asymptotic
// strategy, or the precomputed profile and its path-independent cost for
// the sinh benchmark.
struct KernelContext {
    StrategyKind kind;
    StrategyCoefficients coeffs;       // Asymptotic
    std::vector<double> profile_phi;   // BenchmarkSinh
    double profile_cost = 0.0;         // (Lambda/2) sum rate^2 dt
    double f0 = 0.0;

    static KernelContext build(const LiquidationProblem& problem, StrategyKind kind,
                               const TimeGrid& grid) {
        KernelContext ctx;
        ctx.kind = kind;
        const double sigma = problem.market.sigma;
        if (kind == StrategyKind::Asymptotic) {
            ctx.coeffs = StrategyCoefficients::build(grid, problem.impact.sqrt_rho(sigma));
            ctx.f0 = initial_f(problem.phi0, problem.impact.rho(sigma), grid.horizon());
        } else if (kind == StrategyKind::BenchmarkSinh) {
            const double kappa = problem.impact.sqrt_rho(sigma);
            const StrategyTrajectory prof = benchmark_sinh_profile(problem.phi0, kappa, grid);
            ctx.profile_phi = prof.phi_vals;
            const double half_lambda = 0.5 * problem.impact.lambda;
            double cost = 0.0;
            for (int k = 0; k < grid.n_steps(); ++k) {
                const auto i = static_cast<std::size_t>(k);
                cost += half_lambda * prof.phi_rate[i] * prof.phi_rate[i] * grid.dt();
            }
            ctx.profile_cost = cost;
        }
        return ctx;
    }
};

double exponent_for_path(const LiquidationProblem& problem, const KernelContext& ctx,
                         const TimeGrid& grid, std::uint64_t seed, std::uint64_t index) {
    const int n = grid.n_steps();
    const double alpha = problem.impact.alpha();
    const double sigma = problem.market.sigma;
    const double sqrt_dt = std::sqrt(grid.dt());
    NormalStream z(seed, index);

    double w = 0.0;
    double s = problem.market.s0 + problem.market.mu * grid.time(0) + sigma * w;

    if (ctx.kind == StrategyKind::None) {
        for (int k = 0; k < n; ++k) w += sqrt_dt * z.next();
        const double s_end = problem.market.s0 + problem.market.mu * grid.time(n) + sigma * w;
        return alpha * payoff_f(problem.option, s_end);
    }

    if (ctx.kind == StrategyKind::BenchmarkSinh) {
        double pnl = 0.0;
        for (int k = 0; k < n; ++k) {
            w += sqrt_dt * z.next();
            const double s_next = problem.market.s0 + problem.market.mu * grid.time(k + 1) + sigma * w;
            pnl += ctx.profile_phi[static_cast<std::size_t>(k)] * (s_next - s);
            s = s_next;
        }
        const double v = pnl - ctx.profile_cost;
        return alpha * (payoff_f(problem.option, s) - v);
    }

    // Asymptotic strategy, fused with the path simulation.
    const double shift = sigma * std::sqrt(problem.impact.a);
    const double half_lambda = 0.5 * problem.impact.lambda;
    const bool has_option = problem.option.theta != 0.0;
    const double sqrt_rho = ctx.coeffs.sqrt_rho;
    double f = ctx.f0;
    double pnl = 0.0;
    double cost = 0.0;
    for (int k = 0; k < n; ++k) {
        const auto i = static_cast<std::size_t>(k);
        const double ups = has_option
                               ? delta_ux(problem.option, problem.market, problem.impact.a,
                                          grid.time(k), s - shift * f)
                               : 0.0;
        const double phi = ctx.coeffs.tanh_theta[i] * f;
        const double rate = sqrt_rho * (ctx.coeffs.tanh_half[i] * ups - f);
        w += sqrt_dt * z.next();
        const double s_next = problem.market.s0 + problem.market.mu * grid.time(k + 1) + sigma * w;
        pnl += phi * (s_next - s);
        cost += half_lambda * rate * rate * grid.dt();
        f = ctx.coeffs.decay[i] * f + ups * ctx.coeffs.kick[i];
        s = s_next;
    }
    const double v = pnl - cost;
    return alpha * (payoff_f(problem.option, s) - v);
}

void fill_exponents(const LiquidationProblem& problem, const KernelContext& ctx,
                    const TimeGrid& grid, std::uint64_t seed, int n_threads,
                    std::vector<double>& exponents) {
    const int n_paths = static_cast<int>(exponents.size());
    int threads = n_threads > 0 ? n_threads : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (threads > n_paths) threads = n_paths;

    if (threads == 1) {
        for (int i = 0; i < n_paths; ++i)
            exponents[static_cast<std::size_t>(i)] =
                exponent_for_path(problem, ctx, grid, seed, static_cast<std::uint64_t>(i));
        return;
    }
    // Disjoint contiguous ranges; each slot is written exactly once.
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    const int chunk = (n_paths + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const int lo = t * chunk;
        const int hi = std::min(n_paths, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi]() {
            for (int i = lo; i < hi; ++i)
                exponents[static_cast<std::size_t>(i)] =
                    exponent_for_path(problem, ctx, grid, seed, static_cast<std::uint64_t>(i));
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

double path_exponent(const LiquidationProblem& problem, StrategyKind kind, const TimeGrid& grid,
                     std::uint64_t seed, std::uint64_t path_index) {
    const KernelContext ctx = KernelContext::build(problem, kind, grid);
    return exponent_for_path(problem, ctx, grid, seed, path_index);
}

CEEstimate reduce_exponents(const std::vector<double>& exponents, double alpha) {
    const int n_paths = static_cast<int>(exponents.size());
    if (n_paths < 2) throw std::invalid_argument("reduce_exponents: need at least 2 exponents");

    // Fixed index-order reduction: max, then the shifted exponential mean.
    double mx = exponents[0];
    for (double e : exponents) mx = std::max(mx, e);
    double sum = 0.0;
    for (double e : exponents) sum += std::exp(e - mx);
    const double mean = sum / n_paths;

    double ss = 0.0;
    for (double e : exponents) {
        const double d = std::exp(e - mx) - mean;
        ss += d * d;
    }
    const double sd = std::sqrt(ss / (n_paths - 1));

    CEEstimate out;
    out.n_paths = n_paths;
    out.max_exponent = mx;
    out.log_mean_exp = mx + std::log(mean);
    out.value = out.log_mean_exp / alpha;
    out.stderr_proxy = sd / std::sqrt(static_cast<double>(n_paths)) / (alpha * mean);
    return out;
}

CEEstimate estimate_ce(const LiquidationProblem& problem, StrategyKind kind,
                       const TimeGrid& grid, int n_paths, std::uint64_t seed, int n_threads) {
    if (n_paths < 2) throw std::invalid_argument("estimate_ce: n_paths must be >= 2");
    const KernelContext ctx = KernelContext::build(problem, kind, grid);

    std::vector<double> exponents(static_cast<std::size_t>(n_paths));
    fill_exponents(problem, ctx, grid, seed, n_threads, exponents);
    return reduce_exponents(exponents, problem.impact.alpha());
}

PriceEstimate estimate_indifference_price(const LiquidationProblem& problem, const TimeGrid& grid,
                                          int n_paths, std::uint64_t seed, int n_threads) {
    LiquidationProblem no_option = problem;
    no_option.option.theta = 0.0;

    PriceEstimate out;
    out.ce_with_option = estimate_ce(problem, StrategyKind::Asymptotic, grid, n_paths, seed, n_threads);
    out.ce_without = estimate_ce(no_option, StrategyKind::Asymptotic, grid, n_paths, seed, n_threads);
    out.pi = out.ce_with_option.value - out.ce_without.value;
    return out;
}

double schied_schoneborn_ce(double phi0, double alpha, double lambda, double sigma,
                            double horizon) {
    if (phi0 == 0.0) return 0.0;
    const double kappa_t = sigma * std::sqrt(alpha / lambda) * horizon;
    return 0.5 * phi0 * phi0 * sigma * std::sqrt(alpha * lambda) * coth_stable(kappa_t);
}

}  // namespace liqsim
