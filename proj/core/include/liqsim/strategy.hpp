#pragma once

#include <vector>

#include "liqsim/model.hpp"

namespace liqsim {

// Grid samples of the asymptotically optimal strategy along one path:
// F (the auxiliary ODE state), Phi = tanh(sqrt(rho)(T-t)) F, the trading
// rate, and Upsilon = du/dx(t, S_t - sigma sqrt(A) F_t).
struct StrategyTrajectory {
    TimeGrid grid;
    std::vector<double> f_vals;
    std::vector<double> phi_vals;
    std::vector<double> phi_rate;
    std::vector<double> upsilon;
};

enum class IntegratorKind {
    Exponential,    // integrating-factor one-step scheme, unconditionally stable
    ExplicitEuler,  // test hook only; unstable for stiff rho
};

// Per-grid coefficients of the exponential scheme, shared by every path.
// With theta_k = sqrt(rho)(T - t_k) and d = sqrt(rho) dt the update is
//   F_{k+1} = decay[k] F_k + kick[k] Upsilon_k,
// where decay[k] = cosh(theta_{k+1}) / cosh(theta_k) and
// kick[k] = cosh(theta_{k+1}) (tanh(theta_k/2) - tanh(theta_{k+1}/2)) is the
// exact Duhamel weight of a left-frozen Upsilon. Both are evaluated in
// exponential-difference form; no argument of exp is ever positive.
struct StrategyCoefficients {
    double sqrt_rho = 0.0;
    std::vector<double> theta;       // n+1
    std::vector<double> tanh_theta;  // n+1
    std::vector<double> tanh_half;   // n+1
    std::vector<double> sech2_half;  // n+1
    std::vector<double> decay;       // n
    std::vector<double> kick;        // n

    static StrategyCoefficients build(const TimeGrid& grid, double sqrt_rho);
};

// F_0 = phi0 coth(sqrt(rho) T), in the overflow-free form
// phi0 (1 + e^{-2 sqrt(rho) T}) / (1 - e^{-2 sqrt(rho) T}).
double initial_f(double phi0, double rho, double horizon);

// Integrate the random ODE for F along a path and assemble the trajectory.
// Upsilon is evaluated at the left endpoint of each step; at the final node
// it carries the penultimate value (it multiplies tanh(0) = 0 in the rate).
StrategyTrajectory integrate_trajectory(const LiquidationProblem& problem, const Path& path,
                                        IntegratorKind kind = IntegratorKind::Exponential);

// Trading rate Phi_dot = sqrt(rho) (tanh(sqrt(rho)(T-t)/2) Upsilon - F),
// the singularity-free rewriting of the coth form; finite at t = T.
std::vector<double> phi_rate(const StrategyTrajectory& trajectory, const ImpactParams& impact,
                             const MarketParams& market);

// Deterministic benchmark profile Phi_t = phi0 sinh(kappa (T-t)) / sinh(kappa T)
// with analytic rate, returned in trajectory form (upsilon identically 0,
// f_vals the matching coth-scaled state so phi = tanh * f holds node-wise).
StrategyTrajectory benchmark_sinh_profile(double phi0, double kappa, const TimeGrid& grid);

}  // namespace liqsim
