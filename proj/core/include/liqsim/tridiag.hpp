#pragma once

#include <stdexcept>
#include <vector>

namespace liqsim {

// Thomas algorithm for a tridiagonal system with constant diagonals
// (diag, off) arising from the 1D quadratic minimizations here. The
// matrices are strictly diagonally dominant SPD, so no pivoting is needed.
inline std::vector<double> solve_tridiag_const(double diag, double off,
                                               const std::vector<double>& rhs) {
    const std::size_t n = rhs.size();
    if (n == 0) throw std::invalid_argument("solve_tridiag_const: empty system");
    std::vector<double> c(n), x(n);
    double beta = diag;
    x[0] = rhs[0] / beta;
    for (std::size_t i = 1; i < n; ++i) {
        c[i] = off / beta;
        beta = diag - off * c[i];
        x[i] = (rhs[i] - off * x[i - 1]) / beta;
    }
    for (std::size_t i = n - 1; i-- > 0;) x[i] -= c[i + 1] * x[i + 1];
    return x;
}

}  // namespace liqsim
