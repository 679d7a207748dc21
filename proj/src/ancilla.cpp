#include "cvpde/ancilla.hpp"

#include "cvpde/hermite.hpp"
#include "cvpde/quadrature.hpp"
#include "series_constants.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace cvpde {

namespace {

// Tolerance for the barrier overlap integrals.  The filter fixed point
// F(1) = 1 inherits this error almost one-to-one, and is tested to 1e-12.
constexpr double kBarrierTol = 1e-13;

// Power-series coefficients, up to u^order, of the per-level tail profile
//   (1 - b u)^m * (1 + c2 u)^{-(m+e)},
// the exact u = 1/(a t)^2 expansion shape of level m's contribution to the
// filter after the leading power of a has been factored out.
std::vector<double> tail_profile(int m, double e, double b, double c2,
                                 int order) {
    std::vector<double> binom(order + 1, 0.0), negbin(order + 1, 0.0);
    binom[0] = 1.0;
    for (int i = 1; i <= order && i <= m; ++i)
        binom[i] = binom[i - 1] * (double(m - i + 1) / i) * (-b);
    negbin[0] = 1.0;
    for (int j = 1; j <= order; ++j)
        negbin[j] = negbin[j - 1] * (-(e + m + j - 1) / j) * c2;
    std::vector<double> out(order + 1, 0.0);
    for (int i = 0; i <= order && i <= m; ++i)
        for (int j = 0; i + j <= order; ++j)
            out[i + j] += binom[i] * negbin[j];
    return out;
}

// Common solver for both proposals.  The requirement "F(a) deviates from
// 1/a only at O(u^{M+1})" is the homogeneous linear system
//
//   sum_m gamma_m k_m [u^j](profile_m) = 0   for j = 1..M,
//
// whose M x (M+1) matrix has a one-dimensional kernel; the evolution time t
// enters only through u and drops out.  e is the tail exponent offset
// (3/2 for the odd family, 1/2 for the even one).
AncillaState solve_cancellation(int M, double delta, double e, Parity parity) {
    if (M < 0)
        throw std::invalid_argument("proposal coefficients: M must be >= 0");
    if (!(delta >= 0.0) || !std::isfinite(delta))
        throw std::invalid_argument(
            "proposal coefficients: delta must be finite and >= 0");

    const std::vector<double> k = (parity == Parity::odd)
                                      ? detail::odd_series_constants(M)
                                      : detail::even_series_constants(M);
    Eigen::VectorXd v = Eigen::VectorXd::Zero(M + 1);
    if (M == 0) {
        v[0] = 1.0;
    } else {
        const double c = 1.0 + delta * delta;
        const double b = 1.0 - delta * delta * delta * delta;
        Eigen::MatrixXd A(M, M + 1);
        for (int m = 0; m <= M; ++m) {
            const std::vector<double> profile = tail_profile(m, e, b, c * c, M);
            for (int j = 1; j <= M; ++j) A(j - 1, m) = k[m] * profile[j];
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
        if (lu.dimensionOfKernel() != 1)
            throw std::runtime_error(
                "proposal coefficients: cancellation system is degenerate");
        v = lu.kernel().col(0);
    }
    v.normalize();
    if (v[0] < 0.0) v = -v;  // convention: leading coefficient positive

    AncillaState state;
    state.parity = parity;
    state.norm = 1.0;
    state.coefficients.reserve(M + 1);
    const int offset = (parity == Parity::odd) ? 1 : 0;
    for (int m = 0; m <= M; ++m)
        state.coefficients.push_back({2 * m + offset, v[m]});
    return state;
}

}  // namespace

double AncillaState::coefficient(int n) const {
    for (const FockCoefficient& fc : coefficients)
        if (fc.n == n) return fc.value;
    return 0.0;
}

AncillaState barrier_coefficients(const BarrierParams& params) {
    if (!(params.L > 0.0) || !std::isfinite(params.L))
        throw std::invalid_argument(
            "barrier_coefficients: L must be finite and > 0");
    if (params.d < 0)
        throw std::invalid_argument("barrier_coefficients: d must be >= 0");

    std::vector<double> raw(params.d + 1);
    const double inv_sqrt_L = 1.0 / std::sqrt(params.L);
    for (int n = 0; n <= params.d; ++n)
        raw[n] = inv_sqrt_L *
                 integrate([n](double z) { return hermite_function(n, z); },
                           0.0, params.L, kBarrierTol);

    double sumsq = 0.0;
    for (double g : raw) sumsq += g * g;
    const double gamma = std::sqrt(sumsq);  // Gamma <= 1 (Bessel)

    AncillaState state;
    state.parity = Parity::mixed;
    state.norm = gamma;
    state.coefficients.reserve(params.d + 1);
    for (int n = 0; n <= params.d; ++n)
        state.coefficients.push_back({n, raw[n] / gamma});
    return state;
}

AncillaState proposal1_coefficients(int M, double delta) {
    return solve_cancellation(M, delta, 1.5, Parity::odd);
}

AncillaState proposal2_coefficients(int M, double delta) {
    return solve_cancellation(M, delta, 0.5, Parity::even);
}

}  // namespace cvpde
