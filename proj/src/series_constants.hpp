// Internal: leading constants of the ancilla overlap closed forms.
//
// The filter series involve, per Fock level, the closed-form factors
//
//   h_m(a) = k_m * rho(a)^m        (odd levels 2m+1)
//   g_m(a) = k'_m * rho(a)^m       (even levels 2m)
//
// with rho(a) = (a^2 - 1 + delta^4) / (a^2 + (1+delta^2)^2).  The constants
// obey first-order recurrences derived from the Hermite-function generating
// integrals; both |k_m| sequences grow slower than 2^m and alternate sign.
// Shared between the coefficient solver (ancilla.cpp) and the series
// evaluator (filter.cpp).

#ifndef CVPDE_SRC_SERIES_CONSTANTS_HPP
#define CVPDE_SRC_SERIES_CONSTANTS_HPP

#include <cmath>
#include <vector>

namespace cvpde::detail {

// k_0..k_M for the odd family: k_0 = sqrt(1/2),
// k_{m+1} = -k_m sqrt((2m+3)/(2m+2)).
inline std::vector<double> odd_series_constants(int M) {
    std::vector<double> k(M + 1);
    k[0] = std::sqrt(0.5);
    for (int m = 0; m < M; ++m)
        k[m + 1] = -k[m] * std::sqrt((2.0 * m + 3) / (2.0 * m + 2));
    return k;
}

// k'_0..k'_M for the even family: k'_0 = 1,
// k'_{m+1} = -k'_m sqrt((2m+1)/(2m+2)).
inline std::vector<double> even_series_constants(int M) {
    std::vector<double> k(M + 1);
    k[0] = 1.0;
    for (int m = 0; m < M; ++m)
        k[m + 1] = -k[m] * std::sqrt((2.0 * m + 1) / (2.0 * m + 2));
    return k;
}

}  // namespace cvpde::detail

#endif  // CVPDE_SRC_SERIES_CONSTANTS_HPP
