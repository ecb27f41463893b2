// Test-only oracles, independent of the closed forms they check:
//  - Gauss-Hermite quadrature over the normal law (classical nodes/weights)
//  - kink-split composite Gauss-Legendre quadrature of E[g(x + c Z)], which
//    reaches ~1e-12 where plain Gauss-Hermite stalls near 1e-4 on the
//    payoff kink
//  - tridiagonal QP minimizer of the deterministic liquidation cost
// None of these call the library's normal CDF or its closed-form prices.
#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracles {

struct Quadrature {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss-Hermite rule for integral f(z) e^{-z^2} dz via Newton iteration on
// the orthonormal recurrence (classical gauher construction).
inline Quadrature gauss_hermite(int n) {
    Quadrature q;
    q.nodes.resize(static_cast<std::size_t>(n));
    q.weights.resize(static_cast<std::size_t>(n));
    const double pim4 = 0.7511255444649425;  // pi^{-1/4}
    const int m = (n + 1) / 2;
    double z = 0.0;
    for (int i = 0; i < m; ++i) {
        if (i == 0)
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -0.16667);
        else if (i == 1)
            z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
        else if (i == 2)
            z = 1.86 * z - 0.86 * q.nodes[0];
        else if (i == 3)
            z = 1.91 * z - 0.91 * q.nodes[1];
        else
            z = 2.0 * z - q.nodes[static_cast<std::size_t>(i) - 2];
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = pim4;
            double p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1.0)) * p2 - std::sqrt(j / (j + 1.0)) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-14) break;
        }
        q.nodes[static_cast<std::size_t>(i)] = z;
        q.nodes[static_cast<std::size_t>(n) - 1 - i] = -z;
        q.weights[static_cast<std::size_t>(i)] = 2.0 / (pp * pp);
        q.weights[static_cast<std::size_t>(n) - 1 - i] = q.weights[static_cast<std::size_t>(i)];
    }
    return q;
}

// E[f(Z)] with Z standard normal, via Gauss-Hermite with n nodes.
inline double normal_expectation_gh(const std::function<double(double)>& f, int n) {
    const Quadrature q = gauss_hermite(n);
    const double sqrt2 = std::sqrt(2.0);
    const double inv_sqrt_pi = 0.5641895835477563;
    double acc = 0.0;
    for (std::size_t i = 0; i < q.nodes.size(); ++i)
        acc += q.weights[i] * f(sqrt2 * q.nodes[i]);
    return acc * inv_sqrt_pi;
}

// 20-point Gauss-Legendre panel on [a, b].
inline double gl20(const std::function<double(double)>& f, double a, double b) {
    static const double xs[10] = {
        0.0765265211334973, 0.2277858511416451, 0.3737060887154195, 0.5108670019508271,
        0.6360536807265150, 0.7463319064601508, 0.8391169718222188, 0.9122344282513259,
        0.9639719272779138, 0.9931285991850949};
    static const double ws[10] = {
        0.1527533871307258, 0.1491729864726037, 0.1420961093183820, 0.1316886384491766,
        0.1181945319615184, 0.1019301198172404, 0.0832767415767048, 0.0626720483341091,
        0.0406014298003869, 0.0176140071391521};
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < 10; ++i)
        acc += ws[i] * (f(c + h * xs[i]) + f(c - h * xs[i]));
    return acc * h;
}

inline double composite_gl(const std::function<double(double)>& f, double a, double b,
                           int panels) {
    double acc = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double lo = a + (b - a) * i / panels;
        const double hi = a + (b - a) * (i + 1) / panels;
        acc += gl20(f, lo, hi);
    }
    return acc;
}

// E[max(0, slope Z + intercept)] for Z standard normal, by splitting the
// integral at the kink and integrating each smooth piece against the
// explicit normal density. Accuracy ~1e-13 absolute.
inline double expected_positive_part(double slope, double intercept) {
    const double limit = 12.0;
    const auto integrand = [&](double z) {
        const double v = slope * z + intercept;
        const double inv_sqrt_2pi = 0.3989422804014327;
        return (v > 0.0 ? v : 0.0) * inv_sqrt_2pi * std::exp(-0.5 * z * z);
    };
    if (slope == 0.0) return intercept > 0.0 ? intercept : 0.0;
    const double kink = -intercept / slope;
    if (kink <= -limit || kink >= limit)
        return composite_gl(integrand, -limit, limit, 160);
    return composite_gl(integrand, -limit, kink, 120) +
           composite_gl(integrand, kink, limit, 120);
}

// Minimum of (risk/2) int phi^2 + (lam/2) int phidot^2 over profiles with
// phi(0) = phi0, phi(T) = 0, using P1 elements on n intervals: interior
// stationarity is a constant-coefficient tridiagonal system.
inline double qp_liquidation_cost(double phi0, double risk, double lam, double horizon, int n) {
    if (n < 2) throw std::invalid_argument("qp_liquidation_cost: n too small");
    const double h = horizon / n;
    const double p = 0.5 * lam;
    const double q = 0.5 * risk;
    const double diag = 4.0 * p / h + 4.0 * q * h / 3.0;
    const double off = -2.0 * p / h + q * h / 3.0;

    const std::size_t m = static_cast<std::size_t>(n) - 1;
    std::vector<double> rhs(m, 0.0), c(m), x(m);
    rhs[0] = -off * phi0;
    double beta = diag;
    x[0] = rhs[0] / beta;
    for (std::size_t i = 1; i < m; ++i) {
        c[i] = off / beta;
        beta = diag - off * c[i];
        x[i] = (rhs[i] - off * x[i - 1]) / beta;
    }
    for (std::size_t i = m - 1; i-- > 0;) x[i] -= c[i + 1] * x[i + 1];

    std::vector<double> full(m + 2);
    full[0] = phi0;
    full[m + 1] = 0.0;
    for (std::size_t i = 0; i < m; ++i) full[i + 1] = x[i];
    double energy = 0.0;
    for (std::size_t j = 0; j + 1 < full.size(); ++j) {
        const double d = full[j + 1] - full[j];
        energy += p * d * d / h;
        energy += q * h * (full[j] * full[j] + full[j] * full[j + 1] + full[j + 1] * full[j + 1]) / 3.0;
    }
    return energy;
}

}  // namespace oracles
