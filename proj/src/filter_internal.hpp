// Internal: closed-form series kernels shared by eval_filter and
// success_probability (the probability amplitudes are built from the same
// per-level overlap factors as the filter itself).

#ifndef CVPDE_SRC_FILTER_INTERNAL_HPP
#define CVPDE_SRC_FILTER_INTERNAL_HPP

#include "cvpde/ancilla.hpp"

namespace cvpde::detail {

// sum over the ancilla's odd- (even-) index coefficients of
// c_{2m+o} k_m rho^m; rho = 1 gives the large-argument normalization.
double parity_series(const AncillaState& anc, Parity par, double rho);

// rho(s) = (s^2 - 1 + delta^4) / (s^2 + (1 + delta^2)^2).
double series_ratio(double s, double delta);

}  // namespace cvpde::detail

#endif  // CVPDE_SRC_FILTER_INTERNAL_HPP
