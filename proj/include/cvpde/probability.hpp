// Success probability of the post-selected filter measurement.

#ifndef CVPDE_PROBABILITY_HPP
#define CVPDE_PROBABILITY_HPP

#include "cvpde/filter.hpp"

#include <vector>

namespace cvpde {

enum class NormKind {
    unit,          // sum of f^2 over entries is 1 (checked)
    unnormalized,  // arbitrary positive norm; normalized internally
};

struct SpectralEntry {
    double a;  // eigenvalue of the operator A
    double f;  // coefficient of f on the corresponding eigenvector
};

// Expansion of the source term f over eigenvectors of A.  Eigenvalues must
// be distinct; entries with negligible weight may be dropped by consumers.
struct SpectralDecomposition {
    std::vector<SpectralEntry> entries;
    NormKind norm_kind = NormKind::unit;
};

// Probability that the ancilla measurement post-selects the filtered state,
// for the ArrazolaTruncated / Proposal1 / Proposal2 variants (the window
// width spec.delta must be > 0; the Exact and ArrazolaInfinite variants have
// no measurement and are rejected).  The decomposition is normalized to unit
// 2-norm internally, so the result is invariant under rescaling f; entries
// are truncated once the accumulated weight reaches 1 - 1e-14 of the total.
// Proposal1 additionally normalizes by |A f|, so it requires some entry with
// a != 0.  The result lies in [0, 1] and scales like delta^2 as delta -> 0.
double success_probability(const FilterSpec& spec,
                           const SpectralDecomposition& f);

}  // namespace cvpde

#endif  // CVPDE_PROBABILITY_HPP
