// Ancilla-mode Fock expansions used by the spectral filters.
//
// Each filter variant prepares one auxiliary oscillator mode in a finite
// Fock-basis superposition.  Three constructions are provided:
//
//   * barrier_coefficients  - the step state chi_{[0,L]}(z)/sqrt(L) expanded
//     over phi_0..phi_d (mixed parity; used by the truncated original filter),
//   * proposal1_coefficients - odd-index coefficients gamma_1, gamma_3, ...,
//     gamma_{2M+1} chosen so the filter's large-a expansion in 1/(at)^2
//     cancels through order M (first proposed modification),
//   * proposal2_coefficients - the analogous even-index set gamma_0, ...,
//     gamma_{2M} for the second modification.

#ifndef CVPDE_ANCILLA_HPP
#define CVPDE_ANCILLA_HPP

#include <vector>

namespace cvpde {

enum class Parity { odd, even, mixed };

struct FockCoefficient {
    int n;         // Fock index, >= 0
    double value;  // coefficient of phi_n
};

// A normalized ancilla state together with the norm of the raw (pre-
// normalization) expansion it came from.  For the barrier state the norm is
// Gamma = sqrt(sum gamma_n^2), which enters the filter normalization; the
// proposal coefficient sets are defined only up to scale, so their norm is 1.
struct AncillaState {
    Parity parity = Parity::mixed;
    std::vector<FockCoefficient> coefficients;  // ascending n, unit 2-norm
    double norm = 1.0;

    // Coefficient of phi_n, or 0 if n is not present.
    double coefficient(int n) const;
};

struct BarrierParams {
    double L;  // barrier length, > 0
    int d;     // Fock cutoff, >= 0; indices 0..d are kept
};

// Expansion of the normalized barrier state over phi_0..phi_d:
// gamma_n = L^{-1/2} * integral_0^L phi_n(z) dz, computed by adaptive
// quadrature, then normalized.  norm holds Gamma (the pre-normalization
// 2-norm), which tends to 1 from below as d grows.
AncillaState barrier_coefficients(const BarrierParams& params);

// Odd-index coefficient set {gamma_{2m+1}}_{m=0..M} for the first proposal:
// the unique (up to sign) unit vector that cancels the u, u^2, ..., u^M
// terms of the filter's expansion in u = 1/(at)^2, leaving the ideal 1/a
// behaviour up to O(u^{M+1}).  Normalized so the leading coefficient
// gamma_1 is positive.  delta >= 0 is the momentum window width.
AncillaState proposal1_coefficients(int M, double delta);

// Even-index analogue {gamma_{2m}}_{m=0..M} for the second proposal, with
// gamma_0 > 0.
AncillaState proposal2_coefficients(int M, double delta);

}  // namespace cvpde

#endif  // CVPDE_ANCILLA_HPP
