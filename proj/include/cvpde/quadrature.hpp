// Adaptive Gauss-Legendre quadrature on finite and semi-infinite intervals.
//
// The integrators here serve three distinct masters in this library: ancilla
// overlap coefficients (smooth, compactly peaked), the independent filter
// oracle (oscillatory 2-D kernels), and the worked solution reconstructions
// (Gaussian-damped spectral integrals).  A single scheme covers all of them:
// a fixed 32-point Gauss-Legendre base rule applied per panel, with panels
// refined by bisection until a two-level Richardson comparison meets the
// requested tolerance.

#ifndef CVPDE_QUADRATURE_HPP
#define CVPDE_QUADRATURE_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cvpde {

// Thrown when adaptive refinement exhausts its panel budget before reaching
// the requested tolerance.  Carries the best available estimate and a bound
// on its error so callers can decide whether the partial result is usable.
class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(const std::string& what, double best_estimate_,
                    double error_bound_)
        : std::runtime_error(what), best_estimate(best_estimate_),
          error_bound(error_bound_) {}

    double best_estimate;  // value accumulated when the budget ran out
    double error_bound;    // conservative bound on |truth - best_estimate|
};

// A fixed-order Gauss-Legendre rule mapped onto a finite interval [lo, hi].
struct QuadratureRule {
    std::vector<double> nodes;    // strictly increasing, all inside (lo, hi)
    std::vector<double> weights;  // strictly positive, sum to hi - lo
    double lo = 0.0;
    double hi = 0.0;

    // Build the n-point rule on [lo, hi] (n >= 1, lo < hi).  Nodes and
    // weights come from Newton iteration on the Legendre polynomial and are
    // converged to full double precision.
    static QuadratureRule gauss_legendre(int n, double lo, double hi);

    // Weighted sum of f over the nodes.
    double apply(const std::function<double(double)>& f) const;
};

// Integral of f over [lo, hi] to absolute-or-relative tolerance tol:
// the final error estimate satisfies  err <= tol * max(1, |result|).
// Panels are refined by bisection; a panel is accepted once it has been
// split at least min_depth times (so narrow features cannot hide inside a
// single coarse panel) and its Richardson error estimate is below its
// width-proportional share of the global budget.  Throws QuadratureError if
// more than max_panels panel evaluations are needed.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double tol, int max_panels = 20000);

// Integral of f over [0, inf) for integrands decaying at least like
// exp(-(z/decay_scale)^2/2): the upper limit is truncated where such a tail
// falls below machine precision and the finite integral is delegated to
// integrate().
double integrate_semi_infinite(const std::function<double(double)>& f,
                               double decay_scale, double tol);

}  // namespace cvpde

#endif  // CVPDE_QUADRATURE_HPP
