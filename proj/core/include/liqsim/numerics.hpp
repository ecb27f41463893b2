#pragma once

#include <cmath>

namespace liqsim {

// Standard normal CDF via erfc. Accurate to a few ulp across the whole
// real line, including the far tails (erfc avoids the 1 - small
// cancellation that plain erf-based forms suffer from).
inline double norm_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

inline double norm_pdf(double x) {
    static const double inv_sqrt_2pi = 0.3989422804014326779399461;
    return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

// Hyperbolic ratios in exponential-difference form. Arguments here can be
// of order sqrt(rho)*T ~ 1e3 and beyond, where cosh/sinh overflow double
// precision; every routine below only ever exponentiates non-positive
// numbers. All functions require theta >= 0 unless stated otherwise.

// tanh(theta) = (1 - e^{-2 theta}) / (1 + e^{-2 theta}); expm1 keeps full
// precision for small theta.
inline double tanh_stable(double theta) {
    return -std::expm1(-2.0 * theta) / (1.0 + std::exp(-2.0 * theta));
}

// coth(theta) = (1 + e^{-2 theta}) / (1 - e^{-2 theta}), theta > 0
inline double coth_stable(double theta) {
    return (1.0 + std::exp(-2.0 * theta)) / (-std::expm1(-2.0 * theta));
}

// 1 / sinh(theta) = 2 e^{-theta} / (1 - e^{-2 theta}), theta > 0
inline double csch_stable(double theta) {
    return 2.0 * std::exp(-theta) / (-std::expm1(-2.0 * theta));
}

// sech^2(theta/2) = 4 e^{-theta} / (1 + e^{-theta})^2
inline double sech2_half(double theta) {
    const double e = std::exp(-theta);
    const double d = 1.0 + e;
    return 4.0 * e / (d * d);
}

// cosh(a)/cosh(b) = e^{a-b} (1 + e^{-2a}) / (1 + e^{-2b}), 0 <= a <= b
inline double cosh_ratio(double a, double b) {
    return std::exp(a - b) * (1.0 + std::exp(-2.0 * a)) / (1.0 + std::exp(-2.0 * b));
}

// sinh(a)/sinh(b) = e^{a-b} (1 - e^{-2a}) / (1 - e^{-2b}), 0 <= a <= b.
// expm1 keeps the small-argument limit a/b exact as a, b -> 0 together.
inline double sinh_ratio(double a, double b) {
    return std::exp(a - b) * (-std::expm1(-2.0 * a)) / (-std::expm1(-2.0 * b));
}

}  // namespace liqsim
