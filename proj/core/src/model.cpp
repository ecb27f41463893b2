#include "liqsim/model.hpp"

#include <cmath>
#include <stdexcept>

#include "liqsim/numerics.hpp"
#include "liqsim/rng.hpp"

namespace liqsim {

void MarketParams::validate() const {
    if (!(sigma > 0.0)) throw std::invalid_argument("MarketParams: sigma must be > 0");
    if (!(horizon > 0.0)) throw std::invalid_argument("MarketParams: horizon must be > 0");
}

void ImpactParams::validate() const {
    if (!(lambda > 0.0)) throw std::invalid_argument("ImpactParams: lambda must be > 0");
    if (!(a > 0.0)) throw std::invalid_argument("ImpactParams: a must be > 0");
}

double ImpactParams::sqrt_rho(double sigma) const {
    return sigma * std::sqrt(a) / lambda;
}

TimeGrid TimeGrid::uniform(double horizon, int n_steps) {
    if (n_steps < 2) throw std::invalid_argument("TimeGrid: n_steps must be >= 2");
    if (!(horizon > 0.0)) throw std::invalid_argument("TimeGrid: horizon must be > 0");
    TimeGrid g;
    g.n_steps_ = n_steps;
    g.horizon_ = horizon;
    g.dt_ = horizon / n_steps;
    g.times_.resize(static_cast<std::size_t>(n_steps) + 1);
    for (int k = 0; k <= n_steps; ++k)
        g.times_[static_cast<std::size_t>(k)] = horizon * k / n_steps;
    return g;
}

double payoff_f(const OptionSpec& option, double x) {
    return std::max(0.0, option.theta * (x - option.strike));
}

double modified_payoff_g(const OptionSpec& option, double sigma, double a, double x) {
    if (a < 0.0) throw std::invalid_argument("modified_payoff_g: a must be >= 0");
    const double shift = sigma * std::sqrt(a) * option.theta * option.theta;
    return std::max(0.0, option.theta * (x - option.strike) + shift);
}

double modified_payoff_no_liq(const OptionSpec& option, double sigma, double a, double x) {
    if (a < 0.0) throw std::invalid_argument("modified_payoff_no_liq: a must be >= 0");
    const double shift = 0.5 * sigma * std::sqrt(a) * option.theta * option.theta;
    return std::max(0.0, option.theta * (x - option.strike) + shift);
}

double bachelier_value_u(const OptionSpec& option, const MarketParams& market,
                         double a, double t, double x) {
    if (t < 0.0 || t > market.horizon)
        throw std::domain_error("bachelier_value_u: t outside [0, T]");
    const double m = option.theta * (x - option.strike) +
                     market.sigma * std::sqrt(a) * option.theta * option.theta;
    const double s = std::abs(option.theta) * market.sigma * std::sqrt(market.horizon - t);
    if (s == 0.0) return std::max(0.0, m);
    const double d = m / s;
    return m * norm_cdf(d) + s * norm_pdf(d);
}

double delta_ux(const OptionSpec& option, const MarketParams& market,
                double a, double t, double x) {
    if (t < 0.0 || t >= market.horizon)
        throw std::domain_error("delta_ux: t outside [0, T)");
    if (option.theta == 0.0) return 0.0;
    const double m = option.theta * (x - option.strike) +
                     market.sigma * std::sqrt(a) * option.theta * option.theta;
    const double s = std::abs(option.theta) * market.sigma * std::sqrt(market.horizon - t);
    return option.theta * norm_cdf(m / s);
}

Path simulate_path(const MarketParams& market, const TimeGrid& grid,
                   std::uint64_t seed, std::uint64_t index) {
    NormalStream z(seed, index);
    const int n = grid.n_steps();
    const double sqrt_dt = std::sqrt(grid.dt());
    Path p;
    p.grid = grid;
    p.w.resize(static_cast<std::size_t>(n) + 1);
    p.s.resize(static_cast<std::size_t>(n) + 1);
    p.w[0] = 0.0;
    for (int k = 0; k < n; ++k)
        p.w[static_cast<std::size_t>(k) + 1] = p.w[static_cast<std::size_t>(k)] + sqrt_dt * z.next();
    for (int k = 0; k <= n; ++k)
        p.s[static_cast<std::size_t>(k)] =
            market.s0 + market.mu * grid.time(k) + market.sigma * p.w[static_cast<std::size_t>(k)];
    return p;
}

std::vector<Path> simulate_paths(const MarketParams& market, const TimeGrid& grid,
                                 int n_paths, std::uint64_t seed) {
    if (n_paths < 1) throw std::invalid_argument("simulate_paths: n_paths must be >= 1");
    std::vector<Path> out;
    out.reserve(static_cast<std::size_t>(n_paths));
    for (int i = 0; i < n_paths; ++i)
        out.push_back(simulate_path(market, grid, seed, static_cast<std::uint64_t>(i)));
    return out;
}

}  // namespace liqsim
