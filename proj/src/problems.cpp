#include "cvpde/problems.hpp"

#include "cvpde/quadrature.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace cvpde {

namespace {

// Quadrature tolerance for solution reconstructions; the worked problems
// are compared against closed forms at the 1e-8 level.
constexpr double kSolveTol = 1e-10;

// sum_n T_n(x) F(2n+1) scaled by the joint Gaussian, where
// T_n(x) = (alpha/sqrt(2))^n H_n(x) / n!  is accumulated by the recurrence
//   T_{n+1} = (sqrt(2) alpha x T_n - alpha^2 T_{n-1}) / (n+1),
// so neither alpha^n, n! nor H_n is ever formed on its own (each would
// overflow long before the product does).
double coherent_series(double alpha, int n_max, double x,
                       const std::function<double(double)>& F) {
    double t_prev = 0.0;  // T_{n-1}
    double t_cur = 1.0;   // T_0
    double acc = t_cur * F(1.0);
    const double sqrt2ax = std::sqrt(2.0) * alpha * x;
    for (int n = 0; n < n_max; ++n) {
        const double t_next = (sqrt2ax * t_cur - alpha * alpha * t_prev) / (n + 1);
        acc += t_next * F(2.0 * n + 3.0);
        t_prev = t_cur;
        t_cur = t_next;
    }
    static const double pi_quarter = std::pow(M_PI, -0.25);
    return pi_quarter * std::exp(-0.5 * (x * x + alpha * alpha)) * acc;
}

void check_poisson(const PoissonGaussianInstance& inst, double r) {
    if (!(inst.sigma > 0.0) || !std::isfinite(inst.sigma))
        throw std::invalid_argument("poisson: sigma must be finite and > 0");
    if (!(r >= 0.0) || !std::isfinite(r))
        throw std::invalid_argument("poisson: r must be finite and >= 0");
}

void check_qho(const QhoCoherentInstance& inst, double x) {
    if (!std::isfinite(inst.alpha))
        throw std::invalid_argument("qho: alpha must be finite");
    if (inst.n_max < 0)
        throw std::invalid_argument("qho: n_max must be >= 0");
    if (!std::isfinite(x))
        throw std::invalid_argument("qho: x must be finite");
}

}  // namespace

QhoCoherentInstance::QhoCoherentInstance(double alpha_)
    : alpha(alpha_),
      n_max(static_cast<int>(
          std::ceil(alpha_ * alpha_ + 10.0 * std::abs(alpha_) + 20.0))) {
    if (!std::isfinite(alpha_))
        throw std::invalid_argument("qho: alpha must be finite");
}

QhoCoherentInstance::QhoCoherentInstance(double alpha_, int n_max_)
    : alpha(alpha_), n_max(n_max_) {
    if (!std::isfinite(alpha_))
        throw std::invalid_argument("qho: alpha must be finite");
    if (n_max_ < 0) throw std::invalid_argument("qho: n_max must be >= 0");
}

double poisson_exact(const PoissonGaussianInstance& inst, double r) {
    check_poisson(inst, r);
    const double s = inst.sigma;
    const double pref = 1.0 / std::sqrt(2.0 * std::sqrt(M_PI) * s * s * s);
    if (r == 0.0) return pref * s * std::sqrt(2.0 / M_PI);  // analytic limit
    return pref * std::erf(s * r / std::sqrt(2.0)) / r;
}

double poisson_approx(const PoissonGaussianInstance& inst,
                      const FilterSpec& spec, double r) {
    check_poisson(inst, r);
    const double s = inst.sigma;
    // Radial momentum representation: the Laplacian's eigenvalue at wave
    // number k is k^2, so the solution is the inverse transform of
    // F(k^2) fhat(k) against the spherical kernel sin(kr)/(kr).
    const double pref = 1.0 / std::sqrt(2.0 * std::pow(M_PI, 2.5) * s * s * s);
    const double integral = integrate_semi_infinite(
        [&](double k) {
            const double kr = k * r;
            // Taylor guard: sin(kr)/(kr) loses accuracy only as kr -> 0.
            const double kernel = (std::abs(kr) < 1e-8)
                                      ? 2.0 * (1.0 - kr * kr / 6.0)
                                      : 2.0 * std::sin(kr) / kr;
            return kernel * std::exp(-0.5 * k * k / (s * s)) *
                   eval_filter(spec, k * k) * k * k;
        },
        s, kSolveTol);
    return pref * integral;
}

double qho_exact(const QhoCoherentInstance& inst, double x) {
    check_qho(inst, x);
    return coherent_series(inst.alpha, inst.n_max, x,
                           [](double a) { return 1.0 / a; });
}

double qho_approx(const QhoCoherentInstance& inst, const FilterSpec& spec,
                  double x) {
    check_qho(inst, x);
    return coherent_series(inst.alpha, inst.n_max, x,
                           [&](double a) { return eval_filter(spec, a); });
}

SpectralDecomposition qho_spectral(const QhoCoherentInstance& inst) {
    check_qho(inst, 0.0);
    SpectralDecomposition out;
    out.norm_kind = NormKind::unit;
    out.entries.reserve(inst.n_max + 1);
    // f_{n+1} = f_n * alpha / sqrt(n+1), starting from the Gaussian weight:
    // f_n^2 is the Poisson(alpha^2) mass function, so the truncation error
    // at the default n_max is far below double precision.
    double f = std::exp(-0.5 * inst.alpha * inst.alpha);
    for (int n = 0; n <= inst.n_max; ++n) {
        out.entries.push_back({2.0 * n + 1.0, f});
        f *= inst.alpha / std::sqrt(n + 1.0);
    }
    return out;
}

}  // namespace cvpde
