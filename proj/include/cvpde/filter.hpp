// Spectral filter functions F(a) approximating 1/a.
//
// The algorithms considered here solve A psi = f by acting on the spectral
// decomposition of f with a filter F(a) ~ 1/a realized through
// continuous-variable ancilla modes, a momentum window of width delta, and a
// post-selected measurement.  Five variants are covered:
//
//   Exact             F(a) = 1/a                 (reference only)
//   ArrazolaInfinite  original barrier filter, untruncated closed form
//   ArrazolaTruncated original filter with the barrier state truncated to
//                     Fock indices 0..d
//   Proposal1         odd-ancilla modification: F(a) -> 1/a as |a| -> inf
//                     with error O(1/(at)^{2M+2})
//   Proposal2         even-ancilla modification with the same tail order
//
// All evaluators implement the delta -> 0 limit through cancelled
// lambda*delta combinations, so delta = 0 is a valid input everywhere except
// lambda_for (where lambda alone diverges).

#ifndef CVPDE_FILTER_HPP
#define CVPDE_FILTER_HPP

#include "cvpde/ancilla.hpp"

namespace cvpde {

enum class Variant {
    Exact,
    ArrazolaInfinite,
    ArrazolaTruncated,
    Proposal1,
    Proposal2,
};

// Full description of one filter instance.  Build by hand (aggregate) or via
// the factory helpers below, which construct the matching ancilla state.
struct FilterSpec {
    Variant variant = Variant::Exact;
    double delta = 0.0;     // momentum window width, >= 0
    double t = 1.0;         // evolution time (proposals), != 0
    double L = 0.0;         // barrier length (original variants)
    AncillaState ancilla;   // used by ArrazolaTruncated / Proposal1 / Proposal2

    static FilterSpec exact();
    static FilterSpec arrazola_infinite(double L, double delta);
    static FilterSpec arrazola_truncated(double L, int d, double delta);
    static FilterSpec proposal1(int M, double delta, double t);
    static FilterSpec proposal2(int M, double delta, double t);
};

// The measurement normalization constant lambda (magnitude).  lambda itself
// scales like 1/delta, so this requires delta > 0 (std::domain_error
// otherwise); the filter evaluators below use the finite lambda*delta
// products internally and do not share this restriction.
struct LambdaNorm {
    double value;
};

LambdaNorm lambda_for(const FilterSpec& spec);

// F(a) by the closed-form series expressions (Fock-space route).  This is
// the production evaluator: O(number of ancilla coefficients) per call, no
// quadrature, stable for |a| from 0 to well past 1e8.
double eval_filter(const FilterSpec& spec, double a);

// Relative deviation of F from the ideal filter at eigenvalue a:
// |1 - a F(a)| for the odd-symmetric variants, |1 - |a| F(a)| for the
// proposals (whose target for negative a is 1/|a|).
double relative_error(const FilterSpec& spec, double a);

// F(a) recomputed from first principles as the post-selected amplitude,
// i.e. the 2-D position-representation integral of (ancilla wavefunction) x
// (momentum window) x (evolution kernel), with no shared series algebra.
// Slow; meant as an independent cross-check of eval_filter in tests.
// tol is forwarded to the adaptive quadrature.
double oracle_filter(const FilterSpec& spec, double a, double tol);

}  // namespace cvpde

#endif  // CVPDE_FILTER_HPP
