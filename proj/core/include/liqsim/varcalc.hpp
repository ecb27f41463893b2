#pragma once

namespace liqsim {

// Deterministic variational problem on [0, t_end]: minimize
//   (Lambda / (2 sigma^2 A)) int dot(delta)^2
//   + (1 / (2 Lambda)) [ int delta^2 - (1/t_end)(phi Lambda - int delta)^2 ]
// over continuous paths with delta(0) = 0, delta(t_end) = x.
struct VariationalProblem {
    double lambda = 0.1;  // in (0, 1)
    double a = 1.0;
    double sigma = 1.0;
    double t_end = 1.0;
    double x = 0.0;    // terminal value of delta
    double phi = 0.0;  // inventory-like parameter

    void validate() const;
};

// Closed-form solution: minimizer delta(t) = c1 sinh(sqrt(rho) t)
// + c2 sinh(sqrt(rho)(t_end - t)) + c3, optimal mean y, and the value.
// The evaluators use ratio forms, so they stay finite where sinh(sqrt(rho)
// t_end) itself would overflow (c1, c2 then underflow to 0 as they should).
class VariationalSolution {
public:
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double y = 0.0;      // optimal integral of the minimizer
    double value = 0.0;  // V_{t_end}(lambda, x, phi)

    double minimizer(double t) const;
    double minimizer_deriv(double t) const;

private:
    friend VariationalSolution xi_minimizer(const VariationalProblem& problem);
    double sqrt_rho_ = 0.0;
    double t_end_ = 0.0;
    double x_ = 0.0;
};

// Closed form per the Euler-Lagrange route. Throws std::invalid_argument on
// a malformed problem.
VariationalSolution xi_minimizer(const VariationalProblem& problem);

// Independent discretized oracle: stage one minimizes the P1-element energy
// at fixed integral y (tridiagonal + one multiplier), stage two locates the
// vertex of the exactly quadratic reduced objective from three evaluations.
// Requires n_grid >= 100.
double brute_force_value(const VariationalProblem& problem, int n_grid);

// |V - [(x + sigma sqrt(A) phi)^2 / (4 sigma sqrt(A)) - sigma sqrt(A) phi^2 / 2]|,
// the distance to the vanishing-impact limit value.
double limit_gap(const VariationalProblem& problem);

// Stage-one energy for a fixed integral constraint y, exposed for the
// refinement tests: discretized (conforming) minimum of
// (Lambda/(2 sigma^2 A)) int dot(delta)^2 + (1/(2 Lambda)) int delta^2.
double stage_one_energy(const VariationalProblem& problem, double y, int n_grid);

}  // namespace liqsim
