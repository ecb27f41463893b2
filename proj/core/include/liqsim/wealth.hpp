#pragma once

#include <vector>

#include "liqsim/model.hpp"
#include "liqsim/strategy.hpp"

namespace liqsim {

// Terminal wealth decomposition along one path. Both integrals use
// left-point quadrature (the Ito reading of the trading integral);
// v_terminal is literally trading_pnl - impact_cost and running_v holds the
// same partial-sum difference at every node.
struct WealthBreakdown {
    double trading_pnl = 0.0;   // sum Phi_k (S_{k+1} - S_k)
    double impact_cost = 0.0;   // (Lambda/2) sum PhiRate_k^2 dt
    double v_terminal = 0.0;
    double payoff_x = 0.0;      // f(S_T)
    double exponent = 0.0;      // alpha (X - V_T), kept in log scale
    std::vector<double> running_v;
};

// Step III diagnostics: log M_t, the integrand c_t = (A/Lambda)(Upsilon - Phi),
// per-step Ito residuals of d log M = c dS - (1/2) c^2 sigma^2 dt, and the
// initial value of the supermartingale N (equal to M_0).
struct MartingaleDiagnostic {
    std::vector<double> log_m;
    std::vector<double> c_series;
    std::vector<double> residuals;
    double n0 = 0.0;
};

WealthBreakdown compute_wealth(const Path& path, const StrategyTrajectory& trajectory,
                               const LiquidationProblem& problem);

MartingaleDiagnostic martingale_diagnostic(const Path& path, const StrategyTrajectory& trajectory,
                                           const WealthBreakdown& wealth,
                                           const LiquidationProblem& problem);

}  // namespace liqsim
