#include "cvpde/quadrature.hpp"

#include <cmath>
#include <limits>

namespace cvpde {

namespace {

// Nodes/weights of the n-point Gauss-Legendre rule on [-1, 1], by Newton
// iteration on P_n starting from the Chebyshev-based asymptotic guess.
void legendre_nodes(int n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Root guess, then Newton on P_n evaluated by its recurrence.
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;  // P_n'(z)
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2 * j + 1) * z * p1 - j * p2) / (j + 1);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) {
                // One extra polishing step after convergence, then stop.
                double q0 = 1.0, q1 = 0.0;
                for (int j = 0; j < n; ++j) {
                    double q2 = q1;
                    q1 = q0;
                    q0 = ((2 * j + 1) * z * q1 - j * q2) / (j + 1);
                }
                pp = n * (z * q0 - q1) / (z * z - 1.0);
                z -= q0 / pp;
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
    if (n % 2 == 1) x[half - 1] = 0.0;  // central node is exactly zero
}

// Cached 32-point base rule on [-1, 1] used by the adaptive driver.
const QuadratureRule& base_rule() {
    static const QuadratureRule rule =
        QuadratureRule::gauss_legendre(32, -1.0, 1.0);
    return rule;
}

// Apply the base rule to f over [a, b].
double panel(const std::function<double(double)>& f, double a, double b) {
    const QuadratureRule& r = base_rule();
    const double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        s += r.weights[i] * f(mid + hw * r.nodes[i]);
    return s * hw;
}

struct Segment {
    double a, b;
    double estimate;  // base-rule value over [a, b]
    int depth;
};

}  // namespace

QuadratureRule QuadratureRule::gauss_legendre(int n, double lo, double hi) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    if (!(lo < hi))
        throw std::invalid_argument("gauss_legendre: need lo < hi");
    std::vector<double> x, w;
    legendre_nodes(n, x, w);
    QuadratureRule rule;
    rule.lo = lo;
    rule.hi = hi;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double mid = 0.5 * (lo + hi), hw = 0.5 * (hi - lo);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = mid + hw * x[i];
        rule.weights[i] = hw * w[i];
    }
    return rule;
}

double QuadratureRule::apply(const std::function<double(double)>& f) const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
    return s;
}

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double tol, int max_panels) {
    if (!(tol > 0.0)) throw std::invalid_argument("integrate: tol must be > 0");
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw std::invalid_argument("integrate: bounds must be finite");
    if (lo == hi) return 0.0;
    const double sign = (lo < hi) ? 1.0 : -1.0;
    if (sign < 0) std::swap(lo, hi);

    const double total_width = hi - lo;
    // Error budgets are measured against max(1, |first whole-interval
    // estimate|): a cheap stand-in for the result's magnitude that makes tol
    // behave as a relative tolerance for large integrals and an absolute one
    // for small ones.
    const double first = panel(f, lo, hi);
    const double scale = std::max(1.0, std::abs(first));

    // Depth-first bisection.  Each popped segment is re-evaluated as two
    // halves; the Richardson difference |left + right - whole| bounds the
    // error of the refined pair far more tightly than it bounds `whole`, so
    // accepting (left + right) on success is conservative.  The minimum
    // depth forces a few splits everywhere so that features narrower than
    // the initial panel cannot be missed by one lucky coarse estimate.
    constexpr int kMinDepth = 3;
    std::vector<Segment> stack;
    stack.push_back({lo, hi, first, 0});
    double acc = 0.0;            // accepted panels
    double accepted_err = 0.0;   // their Richardson estimates
    int used = 1;                // panel-rule applications so far

    while (!stack.empty()) {
        Segment seg = stack.back();
        stack.pop_back();
        const double mid = 0.5 * (seg.a + seg.b);
        const double left = panel(f, seg.a, mid);
        const double right = panel(f, mid, seg.b);
        used += 2;
        const double refined = left + right;
        const double err = std::abs(refined - seg.estimate);
        const double share = tol * scale * (seg.b - seg.a) / total_width;
        if (seg.depth >= kMinDepth && err <= share) {
            acc += refined;
            accepted_err += err;
            continue;
        }
        if (used > max_panels) {
            // Budget exhausted: assemble the best estimate from accepted
            // mass plus the still-open segments' coarse values.
            double best = acc + refined;
            double bound = accepted_err + err;
            for (const Segment& s : stack) {
                best += s.estimate;
                bound += std::abs(s.estimate);  // unconverged: no better bound
            }
            throw QuadratureError(
                "integrate: panel budget exhausted before reaching tolerance",
                sign * best, bound);
        }
        stack.push_back({mid, seg.b, right, seg.depth + 1});
        stack.push_back({seg.a, mid, left, seg.depth + 1});
    }
    return sign * acc;
}

double integrate_semi_infinite(const std::function<double(double)>& f,
                               double decay_scale, double tol) {
    if (!(decay_scale > 0.0))
        throw std::invalid_argument(
            "integrate_semi_infinite: decay_scale must be > 0");
    // For a tail bounded by exp(-(z/s)^2/2), truncating at z = s * sqrt(2
    // ln(1/eps)) leaves less than ~eps * (remaining Gaussian mass), which is
    // below double precision for eps = machine epsilon.
    const double eps = std::numeric_limits<double>::epsilon();
    const double cutoff = decay_scale * std::sqrt(2.0 * std::log(1.0 / eps));
    return integrate(f, 0.0, cutoff, tol);
}

}  // namespace cvpde
