#include "liqsim/varcalc.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "liqsim/numerics.hpp"
#include "liqsim/tridiag.hpp"

namespace liqsim {

namespace {

// cosh(a)/sinh(b) for 0 <= a <= b, overflow-free.
double cosh_over_sinh(double a, double b) {
    return std::exp(a - b) * (1.0 + std::exp(-2.0 * a)) / (-std::expm1(-2.0 * b));
}

// theta - 2 tanh(theta/2); series branch below 1e-2 where the direct form
// cancels catastrophically (the difference is ~ theta^3/12).
double theta_minus_2tanh_half(double theta) {
    if (theta < 1e-2) {
        const double t3 = theta * theta * theta;
        return t3 / 12.0 * (1.0 - theta * theta / 10.0);
    }
    return theta - 2.0 * tanh_stable(0.5 * theta);
}

}  // namespace

void VariationalProblem::validate() const {
    if (!(lambda > 0.0 && lambda < 1.0))
        throw std::invalid_argument("VariationalProblem: lambda must lie in (0, 1)");
    if (!(a > 0.0)) throw std::invalid_argument("VariationalProblem: a must be > 0");
    if (!(sigma > 0.0)) throw std::invalid_argument("VariationalProblem: sigma must be > 0");
    if (!(t_end > 0.0)) throw std::invalid_argument("VariationalProblem: t_end must be > 0");
}

VariationalSolution xi_minimizer(const VariationalProblem& p) {
    p.validate();
    const double sa = p.sigma * std::sqrt(p.a);
    const double sr = sa / p.lambda;  // sqrt(rho)
    const double theta = sr * p.t_end;
    const double th2 = tanh_stable(0.5 * theta);
    const double denom = theta_minus_2tanh_half(theta);
    if (!(denom > 0.0))
        throw std::invalid_argument("xi_minimizer: sqrt(rho) t_end too small, constraint denominator underflows");

    VariationalSolution s;
    s.sqrt_rho_ = sr;
    s.t_end_ = p.t_end;
    s.x_ = p.x;

    s.y = 0.5 * p.x * p.t_end - 0.5 * p.phi * p.lambda * denom / th2;
    s.c3 = (sr * s.y - p.x * th2) / denom;
    const double csch = csch_stable(theta);
    s.c1 = (p.x - s.c3) * csch;
    s.c2 = -s.c3 * csch;

    const double w = p.x * th2 - sr * s.y;
    const double stage1 = (p.x * p.x * coth_stable(theta) + w * w / denom) / (2.0 * sa);
    const double resid = p.phi * p.lambda - s.y;
    s.value = stage1 - resid * resid / (2.0 * p.lambda * p.t_end);
    return s;
}

double VariationalSolution::minimizer(double t) const {
    const double theta = sqrt_rho_ * t_end_;
    return (x_ - c3) * sinh_ratio(sqrt_rho_ * t, theta) -
           c3 * sinh_ratio(sqrt_rho_ * (t_end_ - t), theta) + c3;
}

double VariationalSolution::minimizer_deriv(double t) const {
    const double theta = sqrt_rho_ * t_end_;
    return sqrt_rho_ * ((x_ - c3) * cosh_over_sinh(sqrt_rho_ * t, theta) +
                        c3 * cosh_over_sinh(sqrt_rho_ * (t_end_ - t), theta));
}

double stage_one_energy(const VariationalProblem& p, double y, int n_grid) {
    const int n = n_grid;
    const double h = p.t_end / n;
    const double big_p = p.lambda / (2.0 * p.sigma * p.sigma * p.a);  // multiplies int dot^2
    const double big_q = 1.0 / (2.0 * p.lambda);                      // multiplies int delta^2

    // P1 elements with exact element integrals:
    //   int dot(delta)^2 over [t_j, t_{j+1}] = (d_{j+1} - d_j)^2 / h
    //   int delta^2      over [t_j, t_{j+1}] = h (d_j^2 + d_j d_{j+1} + d_{j+1}^2) / 3
    // Interior gradient rows are tridiagonal with constant coefficients.
    const double diag = 4.0 * big_p / h + 4.0 * big_q * h / 3.0;
    const double off = -2.0 * big_p / h + big_q * h / 3.0;
    const double d0 = 0.0;
    const double dn = p.x;

    const std::size_t m = static_cast<std::size_t>(n) - 1;
    std::vector<double> b(m, 0.0);
    b[0] -= off * d0;
    b[m - 1] -= off * dn;

    // Exact integral of the interpolant = trapezoid sum; end nodes are fixed.
    const double y_int = y - 0.5 * h * (d0 + dn);

    const std::vector<double> z = solve_tridiag_const(diag, off, b);
    const std::vector<double> v = solve_tridiag_const(diag, off, std::vector<double>(m, h));
    double wz = 0.0, wv = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        wz += h * z[i];
        wv += h * v[i];
    }
    const double mult = (wz - y_int) / wv;

    std::vector<double> d(m + 2);
    d[0] = d0;
    d[m + 1] = dn;
    for (std::size_t i = 0; i < m; ++i) d[i + 1] = z[i] - mult * v[i];

    double energy = 0.0;
    for (std::size_t j = 0; j + 1 < d.size(); ++j) {
        const double diff = d[j + 1] - d[j];
        energy += big_p * diff * diff / h;
        energy += big_q * h * (d[j] * d[j] + d[j] * d[j + 1] + d[j + 1] * d[j + 1]) / 3.0;
    }
    return energy;
}

double brute_force_value(const VariationalProblem& p, int n_grid) {
    p.validate();
    if (n_grid < 100) throw std::invalid_argument("brute_force_value: n_grid must be >= 100");

    const auto full = [&](double y) {
        const double resid = p.phi * p.lambda - y;
        return stage_one_energy(p, y, n_grid) - resid * resid / (2.0 * p.lambda * p.t_end);
    };

    // The reduced objective is exactly quadratic in y, so three evaluations
    // pin the parabola and its vertex.
    const double y0 = 0.0;
    const double step = std::max(1.0, std::abs(p.x) + std::abs(p.phi));
    const double f0 = full(y0);
    const double fp = full(y0 + step);
    const double fm = full(y0 - step);
    const double curv = fp - 2.0 * f0 + fm;
    const double y_star = y0 - step * (fp - fm) / (2.0 * curv);
    return full(y_star);
}

double limit_gap(const VariationalProblem& p) {
    const VariationalSolution s = xi_minimizer(p);
    const double sa = p.sigma * std::sqrt(p.a);
    const double lim = (p.x + sa * p.phi) * (p.x + sa * p.phi) / (4.0 * sa) -
                       0.5 * sa * p.phi * p.phi;
    return std::abs(s.value - lim);
}

}  // namespace liqsim
