#pragma once

#include <cstdint>
#include <vector>

namespace liqsim {

// Bachelier market S_t = s0 + mu t + sigma W_t on [0, horizon].
struct MarketParams {
    double s0 = 0.0;      // initial price
    double mu = 0.0;      // drift per unit time
    double sigma = 1.0;   // volatility per sqrt(time)
    double horizon = 1.0; // maturity T

    void validate() const;  // sigma > 0, horizon > 0
};

// Payoff family max(0, theta * (x - strike)); theta = 0 encodes no option.
struct OptionSpec {
    double theta = 0.0;
    double strike = 0.0;
};

// Temporary linear impact Lambda and risk scale A. The rescaled risk
// aversion is alpha = A / Lambda; the risk-liquidity ratio is
// rho = sigma^2 A / Lambda^2.
struct ImpactParams {
    double lambda = 0.1;
    double a = 1.0;

    void validate() const;  // lambda > 0, a > 0

    double alpha() const { return a / lambda; }
    double rho(double sigma) const { return sigma * sigma * a / (lambda * lambda); }
    double sqrt_rho(double sigma) const;  // sigma sqrt(A) / Lambda, computed directly
};

struct LiquidationProblem {
    MarketParams market;
    ImpactParams impact;
    OptionSpec option;
    double phi0 = 0.0;  // initial inventory, any real
};

// Uniform grid 0 = t_0 < ... < t_n = T with t_k = k T / n, so that the
// final node is exactly T (the strategy relies on tanh(0) = 0 there).
class TimeGrid {
public:
    TimeGrid() = default;  // empty grid; populate via uniform()

    static TimeGrid uniform(double horizon, int n_steps);

    int n_steps() const { return n_steps_; }
    double dt() const { return dt_; }
    double horizon() const { return horizon_; }
    double time(int k) const { return times_[static_cast<std::size_t>(k)]; }
    const std::vector<double>& times() const { return times_; }

private:
    int n_steps_ = 0;
    double dt_ = 0.0;
    double horizon_ = 0.0;
    std::vector<double> times_;
};

// One simulated path: Brownian samples w_k at grid times and prices
// s_k = s0 + mu t_k + sigma w_k (evaluated by exactly that expression).
struct Path {
    TimeGrid grid;
    std::vector<double> w;
    std::vector<double> s;
};

// max(0, theta (x - strike))
double payoff_f(const OptionSpec& option, double x);

// Modified payoff g(x) = max(0, theta (x - K) + sigma sqrt(A) theta^2).
// Equals sup_y [f(x+y) - y^2 / (4 sigma sqrt(A))] for a > 0; for a = 0 it
// degenerates to f.
double modified_payoff_g(const OptionSpec& option, double sigma, double a, double x);

// No-liquidation comparison payoff: half the shift term,
// max(0, theta (x - K) + sigma sqrt(A) theta^2 / 2).
double modified_payoff_no_liq(const OptionSpec& option, double sigma, double a, double x);

// u(t,x) = E[g(x + sigma W_{T-t})] in closed form: with
// m = theta (x-K) + sigma sqrt(A) theta^2 and s = |theta| sigma sqrt(T-t),
// u = m N(m/s) + s n(m/s) for s > 0 and u = g(x) when s = 0.
// Throws std::domain_error for t outside [0, T].
double bachelier_value_u(const OptionSpec& option, const MarketParams& market,
                         double a, double t, double x);

// du/dx = theta N(m/s); |du/dx| <= |theta|. Defined on [0, T) only;
// throws std::domain_error for t >= T.
double delta_ux(const OptionSpec& option, const MarketParams& market,
                double a, double t, double x);

// Seeded Bachelier paths; path i is a function of (seed, i) only.
std::vector<Path> simulate_paths(const MarketParams& market, const TimeGrid& grid,
                                 int n_paths, std::uint64_t seed);

// Single-path variant used by the Monte Carlo driver; identical output to
// simulate_paths(...)[index].
Path simulate_path(const MarketParams& market, const TimeGrid& grid,
                   std::uint64_t seed, std::uint64_t index);

}  // namespace liqsim
