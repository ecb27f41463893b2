#pragma once

#include <cstdint>
#include <vector>

#include "liqsim/model.hpp"

namespace liqsim {

enum class StrategyKind {
    Asymptotic,     // random-ODE strategy
    BenchmarkSinh,  // deterministic sinh profile at kappa = sqrt(rho)
    None,           // no trading, V identically 0
};

// Certainty-equivalent estimate. value = (1/alpha) logmeanexp of the
// per-path exponents alpha (X_i - V_i); stderr_proxy is the delta-method
// standard error of the log-mean-exp, a proxy only.
struct CEEstimate {
    double value = 0.0;
    double stderr_proxy = 0.0;
    int n_paths = 0;
    double max_exponent = 0.0;
    double log_mean_exp = 0.0;  // on the exponent scale: max + log mean(exp(e - max))

    // Heavy-tail warning: a handful of paths dominating the exponential mean.
    bool heavy_tail() const { return max_exponent - log_mean_exp > 20.0; }
};

struct PriceEstimate {
    double pi = 0.0;  // ce_with_option.value - ce_without.value
    CEEstimate ce_with_option;
    CEEstimate ce_without;
};

// Monte Carlo certainty equivalent of X - V under the chosen strategy.
// Path i depends on (seed, i) only and the reduction runs in fixed index
// order, so the estimate is bitwise reproducible for any thread count.
// n_threads = 0 picks hardware concurrency.
CEEstimate estimate_ce(const LiquidationProblem& problem, StrategyKind kind,
                       const TimeGrid& grid, int n_paths, std::uint64_t seed,
                       int n_threads = 0);

// The reduction half of estimate_ce: log-mean-exp of the exponents in index
// order, value and delta-method stderr on the (1/alpha) scale.
CEEstimate reduce_exponents(const std::vector<double>& exponents, double alpha);

// Indifference price: estimate_ce with the option minus estimate_ce with
// theta = 0, on common random numbers (same seed, same paths).
PriceEstimate estimate_indifference_price(const LiquidationProblem& problem, const TimeGrid& grid,
                                          int n_paths, std::uint64_t seed, int n_threads = 0);

// Closed-form certainty equivalent of the optimal deterministic liquidation
// (no option, mu = 0): (phi0^2/2) sigma sqrt(alpha Lambda) coth(sigma sqrt(alpha/Lambda) T).
double schied_schoneborn_ce(double phi0, double alpha, double lambda, double sigma,
                            double horizon);

// Exponent alpha (X - V_T) for one path, computed by the fused kernel used
// inside estimate_ce; exposed so tests can pin it against the composed
// simulate/integrate/compute_wealth route.
double path_exponent(const LiquidationProblem& problem, StrategyKind kind, const TimeGrid& grid,
                     std::uint64_t seed, std::uint64_t path_index);

}  // namespace liqsim
