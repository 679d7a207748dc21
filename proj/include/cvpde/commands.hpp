// Command-layer entry points: everything the CLI can do, as plain functions
// returning CurveTable, so the same operations are scriptable from C++ and
// python and unit-testable without spawning processes.

#ifndef CVPDE_COMMANDS_HPP
#define CVPDE_COMMANDS_HPP

#include "cvpde/curve_table.hpp"
#include "cvpde/filter.hpp"

#include <string>
#include <vector>

namespace cvpde {

// Evaluation grid, either linear or logarithmic.  n >= 1; n == 1 yields
// just {lo}.  Log spacing requires 0 < lo <= hi.
struct GridSpec {
    double lo = 0.0;
    double hi = 0.0;
    int n = 0;
    bool log_spaced = false;

    std::vector<double> points() const;
};

// CLI token <-> variant mapping ("exact", "arrazola-inf", "arrazola",
// "prop1", "prop2").  variant_from_token throws std::invalid_argument on
// unknown tokens.
Variant variant_from_token(const std::string& token);
std::string variant_token(Variant v);

// ---------------------------------------------------------------------------
// filter-curve: tabulate F(a) over an a-grid.
//
// One column per requested (variant, parameter) combination: the lists
// below are expanded per variant over the parameters that variant actually
// consumes (d for the truncated original; M and t for the proposals; delta
// for everything except the exact filter).  Column names start with the
// variant token and, for every list with more than one entry, gain a
// _<key><value> suffix (e.g. arrazola_d60, prop1_M1_t10).
// ---------------------------------------------------------------------------
struct FilterCurveOptions {
    std::vector<Variant> variants;  // at least one required
    GridSpec a_grid{1e-2, 1e2, 200, true};
    std::vector<double> deltas{0.0};
    std::vector<double> ts{1.0};
    double L = 20.0;
    std::vector<int> ds{20};
    std::vector<int> Ms{0};
};

CurveTable cmd_filter_curve(const FilterCurveOptions& opt);

// ---------------------------------------------------------------------------
// error-curve: same expansion, but tabulating relative_error(spec, a).
// Column names are prefixed with eps_.
// ---------------------------------------------------------------------------
struct ErrorCurveOptions {
    std::vector<Variant> variants{Variant::ArrazolaTruncated,
                                  Variant::Proposal1, Variant::Proposal2};
    GridSpec a_grid{1e-2, 1e2, 200, true};
    std::vector<double> deltas{0.1};
    std::vector<double> ts{10.0};
    double L = 7.0;
    std::vector<int> ds{20};
    std::vector<int> Ms{1};
};

CurveTable cmd_error_curve(const ErrorCurveOptions& opt);

// ---------------------------------------------------------------------------
// probability: success probability against the window width delta, with the
// oscillator coherent-state problem as the source.  Columns are P_<variant>
// (suffixed as above).  fig9_scales multiplies the original filter's column
// by 10 and Proposal 1's by 1000 (appending _x10 / _x1000) - the scaling
// used by the reference comparison plot.
// ---------------------------------------------------------------------------
struct ProbabilityOptions {
    std::vector<Variant> variants{Variant::ArrazolaTruncated,
                                  Variant::Proposal1, Variant::Proposal2};
    // Default: 60 log-spaced window widths over [1e-3, 1].
    std::vector<double> deltas = GridSpec{1e-3, 1.0, 60, true}.points();
    std::vector<double> ts{10.0};
    double L = 20.0;
    std::vector<int> ds{140};
    std::vector<int> Ms{0};
    double alpha = 2.5;  // coherent amplitude of the source
    bool fig9_scales = false;
};

CurveTable cmd_probability(const ProbabilityOptions& opt);

// ---------------------------------------------------------------------------
// solve: reconstruct a worked problem's solution on a spatial grid.  The
// first column is the grid (r for poisson, x for qho), the second the exact
// solution, then one column per (variant, parameter) combination.
// ---------------------------------------------------------------------------
struct SolveOptions {
    std::string problem;  // "poisson" or "qho", required
    std::vector<Variant> variants{Variant::Proposal1, Variant::Proposal2};
    GridSpec r_grid{0.1, 10.0, 100, false};
    GridSpec x_grid{-1.0, 5.0, 100, false};
    std::vector<double> deltas{1.0};
    std::vector<double> ts{10.0};
    double L = 20.0;
    std::vector<int> ds{140};
    std::vector<int> Ms{0};
    double sigma = 4.0;  // poisson source inverse width
    double alpha = 2.5;  // qho coherent amplitude
};

CurveTable cmd_solve(const SolveOptions& opt);

// ---------------------------------------------------------------------------
// coefficients: dump one ancilla expansion (columns fock_index, coefficient,
// norm; the norm column repeats the pre-normalization 2-norm).
// ---------------------------------------------------------------------------
struct CoefficientsOptions {
    Variant variant = Variant::ArrazolaTruncated;  // arrazola, prop1 or prop2
    double L = 20.0;
    int d = 20;
    int M = 1;
    double delta = 0.0;
};

CurveTable cmd_coefficients(const CoefficientsOptions& opt);

}  // namespace cvpde

#endif  // CVPDE_COMMANDS_HPP
