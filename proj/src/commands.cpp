#include "cvpde/commands.hpp"

#include "cvpde/probability.hpp"
#include "cvpde/problems.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

namespace cvpde {

std::vector<double> GridSpec::points() const {
    if (n < 1) throw std::invalid_argument("grid: n must be >= 1");
    if (!std::isfinite(lo) || !std::isfinite(hi) || hi < lo)
        throw std::invalid_argument("grid: need finite lo <= hi");
    if (log_spaced && !(lo > 0.0))
        throw std::invalid_argument("grid: log spacing needs lo > 0");
    std::vector<double> pts(n);
    if (n == 1) {
        pts[0] = lo;
        return pts;
    }
    if (log_spaced) {
        const double llo = std::log(lo), lhi = std::log(hi);
        for (int i = 0; i < n; ++i)
            pts[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
    } else {
        for (int i = 0; i < n; ++i) pts[i] = lo + (hi - lo) * i / (n - 1);
    }
    pts.front() = lo;  // pin endpoints exactly
    pts.back() = hi;
    return pts;
}

Variant variant_from_token(const std::string& token) {
    if (token == "exact") return Variant::Exact;
    if (token == "arrazola-inf") return Variant::ArrazolaInfinite;
    if (token == "arrazola") return Variant::ArrazolaTruncated;
    if (token == "prop1") return Variant::Proposal1;
    if (token == "prop2") return Variant::Proposal2;
    throw std::invalid_argument(
        "unknown variant '" + token +
        "' (expected exact, arrazola-inf, arrazola, prop1 or prop2)");
}

std::string variant_token(Variant v) {
    switch (v) {
        case Variant::Exact: return "exact";
        case Variant::ArrazolaInfinite: return "arrazola-inf";
        case Variant::ArrazolaTruncated: return "arrazola";
        case Variant::Proposal1: return "prop1";
        case Variant::Proposal2: return "prop2";
    }
    throw std::invalid_argument("unknown variant");
}

namespace {

// Shortest unambiguous rendering of a parameter value for column names.
std::string value_token(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

struct Combo {
    std::string name;
    FilterSpec spec;
};

// Expands (variants x relevant parameter lists) into named filter specs.
// Each variant consumes only the lists that affect it: d for the truncated
// original, M and t for the proposals, delta for everything except the
// exact filter.  A _<key><value> suffix is appended per list that carries
// more than one entry, so single-valued runs keep short column names.
struct ComboExpander {
    std::vector<double> deltas;
    std::vector<double> ts;
    double L = 0.0;
    std::vector<int> ds;
    std::vector<int> Ms;

    // Barrier expansions are delta-independent; share them across deltas.
    std::map<int, AncillaState> barrier_cache;

    const AncillaState& barrier(int d) {
        auto it = barrier_cache.find(d);
        if (it == barrier_cache.end())
            it = barrier_cache.emplace(d, barrier_coefficients({L, d})).first;
        return it->second;
    }

    std::vector<Combo> expand(const std::vector<Variant>& variants) {
        std::vector<Combo> out;
        for (Variant v : variants) {
            const std::string base = variant_token(v);
            switch (v) {
                case Variant::Exact:
                    out.push_back({base, FilterSpec::exact()});
                    break;
                case Variant::ArrazolaInfinite:
                    for (double delta : deltas) {
                        FilterSpec spec = FilterSpec::arrazola_infinite(L, delta);
                        out.push_back({base + delta_suffix(delta), spec});
                    }
                    break;
                case Variant::ArrazolaTruncated:
                    for (int d : ds)
                        for (double delta : deltas) {
                            FilterSpec spec;
                            spec.variant = Variant::ArrazolaTruncated;
                            spec.L = L;
                            spec.delta = delta;
                            spec.ancilla = barrier(d);
                            std::string name = base;
                            if (ds.size() > 1) name += "_d" + std::to_string(d);
                            name += delta_suffix(delta);
                            out.push_back({std::move(name), std::move(spec)});
                        }
                    break;
                case Variant::Proposal1:
                case Variant::Proposal2:
                    for (int M : Ms)
                        for (double t : ts)
                            for (double delta : deltas) {
                                FilterSpec spec =
                                    (v == Variant::Proposal1)
                                        ? FilterSpec::proposal1(M, delta, t)
                                        : FilterSpec::proposal2(M, delta, t);
                                std::string name = base;
                                if (Ms.size() > 1)
                                    name += "_M" + std::to_string(M);
                                if (ts.size() > 1) name += "_t" + value_token(t);
                                name += delta_suffix(delta);
                                out.push_back({std::move(name), std::move(spec)});
                            }
                    break;
            }
        }
        return out;
    }

  private:
    std::string delta_suffix(double delta) const {
        return deltas.size() > 1 ? "_delta" + value_token(delta) : "";
    }
};

std::vector<double> map_grid(const std::vector<double>& grid,
                             const std::function<double(double)>& f) {
    std::vector<double> out;
    out.reserve(grid.size());
    for (double g : grid) out.push_back(f(g));
    return out;
}

}  // namespace

CurveTable cmd_filter_curve(const FilterCurveOptions& opt) {
    if (opt.variants.empty())
        throw std::invalid_argument("filter-curve: at least one variant required");
    const std::vector<double> grid = opt.a_grid.points();
    ComboExpander ex{opt.deltas, opt.ts, opt.L, opt.ds, opt.Ms};
    CurveTable table;
    table.add_column("a", grid);
    for (Combo& combo : ex.expand(opt.variants))
        table.add_column(combo.name, map_grid(grid, [&](double a) {
                             return eval_filter(combo.spec, a);
                         }));
    table.validate();
    return table;
}

CurveTable cmd_error_curve(const ErrorCurveOptions& opt) {
    if (opt.variants.empty())
        throw std::invalid_argument("error-curve: at least one variant required");
    const std::vector<double> grid = opt.a_grid.points();
    ComboExpander ex{opt.deltas, opt.ts, opt.L, opt.ds, opt.Ms};
    CurveTable table;
    table.add_column("a", grid);
    for (Combo& combo : ex.expand(opt.variants))
        table.add_column("eps_" + combo.name, map_grid(grid, [&](double a) {
                             return relative_error(combo.spec, a);
                         }));
    table.validate();
    return table;
}

CurveTable cmd_probability(const ProbabilityOptions& opt) {
    if (opt.variants.empty())
        throw std::invalid_argument("probability: at least one variant required");
    for (Variant v : opt.variants)
        if (v == Variant::Exact || v == Variant::ArrazolaInfinite)
            throw std::invalid_argument(
                "probability: variant '" + variant_token(v) +
                "' has no post-selected measurement");
    if (opt.deltas.empty())
        throw std::invalid_argument("probability: need at least one delta");

    const SpectralDecomposition source =
        qho_spectral(QhoCoherentInstance(opt.alpha));

    ComboExpander ex{{0.0}, opt.ts, opt.L, opt.ds, opt.Ms};
    CurveTable table;
    table.add_column("delta", opt.deltas);
    for (Variant v : opt.variants) {
        // Expand everything except delta, which is this command's grid.
        for (Combo& combo : ex.expand({v})) {
            double scale = 1.0;
            std::string suffix;
            if (opt.fig9_scales && v == Variant::ArrazolaTruncated) {
                scale = 10.0;
                suffix = "_x10";
            } else if (opt.fig9_scales && v == Variant::Proposal1) {
                scale = 1000.0;
                suffix = "_x1000";
            }
            std::vector<double> col;
            col.reserve(opt.deltas.size());
            for (double delta : opt.deltas) {
                FilterSpec spec = combo.spec;
                spec.delta = delta;
                // Proposal coefficient sets depend on delta; rebuild them.
                if (v == Variant::Proposal1)
                    spec.ancilla = proposal1_coefficients(
                        spec.ancilla.coefficients.back().n / 2, delta);
                else if (v == Variant::Proposal2)
                    spec.ancilla = proposal2_coefficients(
                        spec.ancilla.coefficients.back().n / 2, delta);
                col.push_back(scale * success_probability(spec, source));
            }
            table.add_column("P_" + combo.name + suffix, std::move(col));
        }
    }
    table.validate();
    return table;
}

CurveTable cmd_solve(const SolveOptions& opt) {
    if (opt.variants.empty())
        throw std::invalid_argument("solve: at least one variant required");

    std::vector<double> grid;
    std::string grid_name;
    std::function<double(double)> exact;
    std::function<double(const FilterSpec&, double)> approx;
    if (opt.problem == "poisson") {
        const PoissonGaussianInstance inst{opt.sigma};
        grid = opt.r_grid.points();
        grid_name = "r";
        exact = [inst](double r) { return poisson_exact(inst, r); };
        approx = [inst](const FilterSpec& spec, double r) {
            return poisson_approx(inst, spec, r);
        };
    } else if (opt.problem == "qho") {
        const QhoCoherentInstance inst(opt.alpha);
        grid = opt.x_grid.points();
        grid_name = "x";
        exact = [inst](double x) { return qho_exact(inst, x); };
        approx = [inst](const FilterSpec& spec, double x) {
            return qho_approx(inst, spec, x);
        };
    } else {
        throw std::invalid_argument(
            "solve: problem must be 'poisson' or 'qho'");
    }

    ComboExpander ex{opt.deltas, opt.ts, opt.L, opt.ds, opt.Ms};
    CurveTable table;
    table.add_column(grid_name, grid);
    table.add_column("exact", map_grid(grid, exact));
    for (Combo& combo : ex.expand(opt.variants)) {
        // Avoid colliding with the reference column when the exact filter
        // itself is requested as a variant.
        const std::string name =
            (combo.spec.variant == Variant::Exact) ? "exact-filter"
                                                   : combo.name;
        table.add_column(name, map_grid(grid, [&](double g) {
                             return approx(combo.spec, g);
                         }));
    }
    table.validate();
    return table;
}

CurveTable cmd_coefficients(const CoefficientsOptions& opt) {
    AncillaState state;
    switch (opt.variant) {
        case Variant::ArrazolaTruncated:
            state = barrier_coefficients({opt.L, opt.d});
            break;
        case Variant::Proposal1:
            state = proposal1_coefficients(opt.M, opt.delta);
            break;
        case Variant::Proposal2:
            state = proposal2_coefficients(opt.M, opt.delta);
            break;
        default:
            throw std::invalid_argument(
                "coefficients: variant '" + variant_token(opt.variant) +
                "' has no ancilla expansion");
    }
    std::vector<double> index, value, norm;
    index.reserve(state.coefficients.size());
    value.reserve(state.coefficients.size());
    norm.assign(state.coefficients.size(), state.norm);
    for (const FockCoefficient& fc : state.coefficients) {
        index.push_back(static_cast<double>(fc.n));
        value.push_back(fc.value);
    }
    CurveTable table;
    table.add_column("fock_index", std::move(index));
    table.add_column("coefficient", std::move(value));
    table.add_column("norm", std::move(norm));
    table.validate();
    return table;
}

}  // namespace cvpde
