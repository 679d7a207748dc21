#include "cvpde/probability.hpp"

#include "filter_internal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cvpde {

namespace {

// Fraction of the total weight that must be accumulated before the
// remaining entries may be dropped.
constexpr double kWeightKeep = 1.0 - 1e-14;

// Validates the decomposition, normalizes it to unit 2-norm and drops the
// negligible tail (largest weights kept first).  Returns entries sorted by
// descending weight - the summation order is part of the deterministic
// output contract.
std::vector<SpectralEntry> prepare(const SpectralDecomposition& f) {
    if (f.entries.empty())
        throw std::invalid_argument(
            "success_probability: empty spectral decomposition");
    double total = 0.0;
    for (const SpectralEntry& e : f.entries) {
        if (!std::isfinite(e.a) || !std::isfinite(e.f))
            throw std::invalid_argument(
                "success_probability: entries must be finite");
        total += e.f * e.f;
    }
    if (!(total > 0.0))
        throw std::invalid_argument(
            "success_probability: decomposition has zero norm");
    if (f.norm_kind == NormKind::unit && std::abs(total - 1.0) > 1e-10)
        throw std::invalid_argument(
            "success_probability: NormKind::unit but sum f^2 != 1");

    std::vector<SpectralEntry> entries = f.entries;
    std::sort(entries.begin(), entries.end(),
              [](const SpectralEntry& x, const SpectralEntry& y) {
                  return x.f * x.f > y.f * y.f ||
                         (x.f * x.f == y.f * y.f && x.a < y.a);
              });
    {
        // Distinct eigenvalues are a type invariant (each entry is one
        // eigenspace).
        std::vector<double> eigs(entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) eigs[i] = entries[i].a;
        std::sort(eigs.begin(), eigs.end());
        if (std::adjacent_find(eigs.begin(), eigs.end()) != eigs.end())
            throw std::invalid_argument(
                "success_probability: duplicate eigenvalues");
    }

    const double inv_norm = 1.0 / std::sqrt(total);
    double kept = 0.0;
    std::size_t count = 0;
    while (count < entries.size() && kept < kWeightKeep * total) {
        kept += entries[count].f * entries[count].f;
        ++count;
    }
    entries.resize(count);
    for (SpectralEntry& e : entries) e.f *= inv_norm;
    return entries;
}

}  // namespace

double success_probability(const FilterSpec& spec,
                           const SpectralDecomposition& f) {
    if (!(spec.delta > 0.0) || !std::isfinite(spec.delta))
        throw std::invalid_argument(
            "success_probability: needs a window width delta > 0");
    if (spec.variant == Variant::Exact ||
        spec.variant == Variant::ArrazolaInfinite)
        throw std::invalid_argument(
            "success_probability: variant has no post-selected measurement");

    const std::vector<SpectralEntry> entries = prepare(f);
    const double d2 = spec.delta * spec.delta;
    const double c = 1.0 + d2;

    switch (spec.variant) {
        case Variant::ArrazolaTruncated: {
            if (spec.ancilla.coefficients.empty())
                throw std::invalid_argument(
                    "success_probability: truncated filter needs an ancilla");
            double sum = 0.0;
            for (const SpectralEntry& e : entries) {
                const double den = e.a * e.a + c * c;
                const double series = detail::parity_series(
                    spec.ancilla, Parity::odd,
                    detail::series_ratio(e.a, spec.delta));
                const double amp = e.a * e.f * series / (den * std::sqrt(den));
                sum += amp * amp;
            }
            return 8.0 * d2 * sum;
        }

        case Variant::Proposal1: {
            if (spec.t == 0.0 || !std::isfinite(spec.t) ||
                spec.ancilla.parity != Parity::odd)
                throw std::invalid_argument(
                    "success_probability: malformed Proposal1 spec");
            // The prepared state is (1/|A f|) A f, so the amplitude carries
            // an extra eigenvalue factor and the overall 1/Omega^2.
            double omega2 = 0.0;
            for (const SpectralEntry& e : entries) omega2 += e.a * e.a * e.f * e.f;
            if (!(omega2 > 0.0))
                throw std::invalid_argument(
                    "success_probability: Proposal1 needs |A f| > 0 (all "
                    "weight sits at eigenvalue 0)");
            double sum = 0.0;
            for (const SpectralEntry& e : entries) {
                const double s = e.a * spec.t;
                const double den = s * s + c * c;
                const double series = detail::parity_series(
                    spec.ancilla, Parity::odd,
                    detail::series_ratio(s, spec.delta));
                const double amp =
                    spec.t * e.a * e.a * e.f * series / (den * std::sqrt(den));
                sum += amp * amp;
            }
            return 8.0 * d2 * sum / omega2;
        }

        case Variant::Proposal2: {
            if (spec.t == 0.0 || !std::isfinite(spec.t) ||
                spec.ancilla.parity != Parity::even)
                throw std::invalid_argument(
                    "success_probability: malformed Proposal2 spec");
            double sum = 0.0;
            for (const SpectralEntry& e : entries) {
                const double s = e.a * spec.t;
                const double den = s * s + c * c;
                const double series = detail::parity_series(
                    spec.ancilla, Parity::even,
                    detail::series_ratio(s, spec.delta));
                sum += e.f * e.f * series * series / den;
            }
            return 4.0 * d2 * sum;
        }

        default:
            throw std::invalid_argument(
                "success_probability: unknown variant");
    }
}

}  // namespace cvpde
