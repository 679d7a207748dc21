// Python bindings for the cvpde core: numerics, ancilla expansions, filter
// evaluation, success probabilities, the worked problems and the table
// producing command layer.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cvpde/commands.hpp"
#include "cvpde/curve_table.hpp"
#include "cvpde/filter.hpp"
#include "cvpde/hermite.hpp"
#include "cvpde/probability.hpp"
#include "cvpde/problems.hpp"
#include "cvpde/quadrature.hpp"

namespace py = pybind11;
using namespace cvpde;

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Spectral filters for nonhomogeneous linear PDEs on "
        "continuous-variable quantum hardware";

    // ---- numerics ----
    m.def("hermite_function", &hermite_function, py::arg("n"), py::arg("z"),
          "Normalized oscillator eigenfunction phi_n(z)");
    m.def("integrate", &integrate, py::arg("f"), py::arg("lo"), py::arg("hi"),
          py::arg("tol"), py::arg("max_panels") = 20000,
          "Adaptive Gauss-Legendre integral of f over [lo, hi]");
    m.def("integrate_semi_infinite", &integrate_semi_infinite, py::arg("f"),
          py::arg("decay_scale"), py::arg("tol"),
          "Adaptive integral of a Gaussian-decaying f over [0, inf)");

    py::class_<QuadratureRule>(m, "QuadratureRule")
        .def_static("gauss_legendre", &QuadratureRule::gauss_legendre,
                    py::arg("n"), py::arg("lo"), py::arg("hi"))
        .def("apply", &QuadratureRule::apply, py::arg("f"))
        .def_readonly("nodes", &QuadratureRule::nodes)
        .def_readonly("weights", &QuadratureRule::weights)
        .def_readonly("lo", &QuadratureRule::lo)
        .def_readonly("hi", &QuadratureRule::hi);

    static py::exception<QuadratureError> quad_error(m, "QuadratureFailure",
                                                     PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const QuadratureError& e) {
            quad_error(e.what());
        }
    });

    // ---- ancilla ----
    py::enum_<Parity>(m, "Parity")
        .value("odd", Parity::odd)
        .value("even", Parity::even)
        .value("mixed", Parity::mixed);

    py::class_<FockCoefficient>(m, "FockCoefficient")
        .def(py::init([](int n, double value) {
                 return FockCoefficient{n, value};
             }),
             py::arg("n"), py::arg("value"))
        .def_readwrite("n", &FockCoefficient::n)
        .def_readwrite("value", &FockCoefficient::value)
        .def("__repr__", [](const FockCoefficient& fc) {
            return "FockCoefficient(n=" + std::to_string(fc.n) +
                   ", value=" + std::to_string(fc.value) + ")";
        });

    py::class_<AncillaState>(m, "AncillaState")
        .def(py::init<>())
        .def_readwrite("parity", &AncillaState::parity)
        .def_readwrite("coefficients", &AncillaState::coefficients)
        .def_readwrite("norm", &AncillaState::norm)
        .def("coefficient", &AncillaState::coefficient, py::arg("n"));

    m.def(
        "barrier_coefficients",
        [](double L, int d) { return barrier_coefficients({L, d}); },
        py::arg("L"), py::arg("d"),
        "Normalized barrier-state expansion over phi_0..phi_d");
    m.def("proposal1_coefficients", &proposal1_coefficients, py::arg("M"),
          py::arg("delta"));
    m.def("proposal2_coefficients", &proposal2_coefficients, py::arg("M"),
          py::arg("delta"));

    // ---- filter ----
    py::enum_<Variant>(m, "Variant")
        .value("Exact", Variant::Exact)
        .value("ArrazolaInfinite", Variant::ArrazolaInfinite)
        .value("ArrazolaTruncated", Variant::ArrazolaTruncated)
        .value("Proposal1", Variant::Proposal1)
        .value("Proposal2", Variant::Proposal2);

    py::class_<FilterSpec>(m, "FilterSpec")
        .def(py::init<>())
        .def_readwrite("variant", &FilterSpec::variant)
        .def_readwrite("delta", &FilterSpec::delta)
        .def_readwrite("t", &FilterSpec::t)
        .def_readwrite("L", &FilterSpec::L)
        .def_readwrite("ancilla", &FilterSpec::ancilla)
        .def_static("exact", &FilterSpec::exact)
        .def_static("arrazola_infinite", &FilterSpec::arrazola_infinite,
                    py::arg("L"), py::arg("delta"))
        .def_static("arrazola_truncated", &FilterSpec::arrazola_truncated,
                    py::arg("L"), py::arg("d"), py::arg("delta"))
        .def_static("proposal1", &FilterSpec::proposal1, py::arg("M"),
                    py::arg("delta"), py::arg("t"))
        .def_static("proposal2", &FilterSpec::proposal2, py::arg("M"),
                    py::arg("delta"), py::arg("t"));

    py::class_<LambdaNorm>(m, "LambdaNorm")
        .def_readonly("value", &LambdaNorm::value);

    m.def("lambda_for", &lambda_for, py::arg("spec"));
    m.def("eval_filter", &eval_filter, py::arg("spec"), py::arg("a"));
    m.def("relative_error", &relative_error, py::arg("spec"), py::arg("a"));
    m.def("oracle_filter", &oracle_filter, py::arg("spec"), py::arg("a"),
          py::arg("tol") = 1e-10,
          "F(a) recomputed from the defining 2-D integral (slow cross-check)");

    // ---- probability ----
    py::enum_<NormKind>(m, "NormKind")
        .value("unit", NormKind::unit)
        .value("unnormalized", NormKind::unnormalized);

    py::class_<SpectralEntry>(m, "SpectralEntry")
        .def(py::init(
                 [](double a, double f) { return SpectralEntry{a, f}; }),
             py::arg("a"), py::arg("f"))
        .def_readwrite("a", &SpectralEntry::a)
        .def_readwrite("f", &SpectralEntry::f);

    py::class_<SpectralDecomposition>(m, "SpectralDecomposition")
        .def(py::init<>())
        .def(py::init([](const std::vector<std::pair<double, double>>& pairs,
                         NormKind kind) {
                 SpectralDecomposition d;
                 d.norm_kind = kind;
                 d.entries.reserve(pairs.size());
                 for (const auto& [a, f] : pairs) d.entries.push_back({a, f});
                 return d;
             }),
             py::arg("entries"), py::arg("norm_kind") = NormKind::unit)
        .def_readwrite("entries", &SpectralDecomposition::entries)
        .def_readwrite("norm_kind", &SpectralDecomposition::norm_kind);

    m.def("success_probability", &success_probability, py::arg("spec"),
          py::arg("f"));

    // ---- problems ----
    py::class_<PoissonGaussianInstance>(m, "PoissonGaussianInstance")
        .def(py::init([](double sigma) {
                 return PoissonGaussianInstance{sigma};
             }),
             py::arg("sigma") = 4.0)
        .def_readwrite("sigma", &PoissonGaussianInstance::sigma)
        .def_readonly_static("dimension", &PoissonGaussianInstance::dimension);

    py::class_<QhoCoherentInstance>(m, "QhoCoherentInstance")
        .def(py::init<double>(), py::arg("alpha"))
        .def(py::init<double, int>(), py::arg("alpha"), py::arg("n_max"))
        .def_readwrite("alpha", &QhoCoherentInstance::alpha)
        .def_readwrite("n_max", &QhoCoherentInstance::n_max);

    m.def("poisson_exact", &poisson_exact, py::arg("inst"), py::arg("r"));
    m.def("poisson_approx", &poisson_approx, py::arg("inst"), py::arg("spec"),
          py::arg("r"));
    m.def("qho_exact", &qho_exact, py::arg("inst"), py::arg("x"));
    m.def("qho_approx", &qho_approx, py::arg("inst"), py::arg("spec"),
          py::arg("x"));
    m.def("qho_spectral", &qho_spectral, py::arg("inst"));

    // ---- tables and commands ----
    py::class_<CurveTable::Column>(m, "Column")
        .def_readonly("name", &CurveTable::Column::name)
        .def_readonly("values", &CurveTable::Column::values);

    py::class_<CurveTable>(m, "CurveTable")
        .def(py::init<>())
        .def_readonly("columns", &CurveTable::columns)
        .def("row_count", &CurveTable::row_count)
        .def("add_column", &CurveTable::add_column, py::arg("name"),
             py::arg("values"))
        .def("validate", &CurveTable::validate)
        .def("to_csv", &CurveTable::to_csv);

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init([](double lo, double hi, int n, bool log_spaced) {
                 return GridSpec{lo, hi, n, log_spaced};
             }),
             py::arg("lo"), py::arg("hi"), py::arg("n"),
             py::arg("log_spaced") = false)
        .def_readwrite("lo", &GridSpec::lo)
        .def_readwrite("hi", &GridSpec::hi)
        .def_readwrite("n", &GridSpec::n)
        .def_readwrite("log_spaced", &GridSpec::log_spaced)
        .def("points", &GridSpec::points);

    m.def("variant_from_token", &variant_from_token, py::arg("token"));
    m.def("variant_token", &variant_token, py::arg("v"));

    py::class_<FilterCurveOptions>(m, "FilterCurveOptions")
        .def(py::init<>())
        .def_readwrite("variants", &FilterCurveOptions::variants)
        .def_readwrite("a_grid", &FilterCurveOptions::a_grid)
        .def_readwrite("deltas", &FilterCurveOptions::deltas)
        .def_readwrite("ts", &FilterCurveOptions::ts)
        .def_readwrite("L", &FilterCurveOptions::L)
        .def_readwrite("ds", &FilterCurveOptions::ds)
        .def_readwrite("Ms", &FilterCurveOptions::Ms);

    py::class_<ErrorCurveOptions>(m, "ErrorCurveOptions")
        .def(py::init<>())
        .def_readwrite("variants", &ErrorCurveOptions::variants)
        .def_readwrite("a_grid", &ErrorCurveOptions::a_grid)
        .def_readwrite("deltas", &ErrorCurveOptions::deltas)
        .def_readwrite("ts", &ErrorCurveOptions::ts)
        .def_readwrite("L", &ErrorCurveOptions::L)
        .def_readwrite("ds", &ErrorCurveOptions::ds)
        .def_readwrite("Ms", &ErrorCurveOptions::Ms);

    py::class_<ProbabilityOptions>(m, "ProbabilityOptions")
        .def(py::init<>())
        .def_readwrite("variants", &ProbabilityOptions::variants)
        .def_readwrite("deltas", &ProbabilityOptions::deltas)
        .def_readwrite("ts", &ProbabilityOptions::ts)
        .def_readwrite("L", &ProbabilityOptions::L)
        .def_readwrite("ds", &ProbabilityOptions::ds)
        .def_readwrite("Ms", &ProbabilityOptions::Ms)
        .def_readwrite("alpha", &ProbabilityOptions::alpha)
        .def_readwrite("fig9_scales", &ProbabilityOptions::fig9_scales);

    py::class_<SolveOptions>(m, "SolveOptions")
        .def(py::init<>())
        .def_readwrite("problem", &SolveOptions::problem)
        .def_readwrite("variants", &SolveOptions::variants)
        .def_readwrite("r_grid", &SolveOptions::r_grid)
        .def_readwrite("x_grid", &SolveOptions::x_grid)
        .def_readwrite("deltas", &SolveOptions::deltas)
        .def_readwrite("ts", &SolveOptions::ts)
        .def_readwrite("L", &SolveOptions::L)
        .def_readwrite("ds", &SolveOptions::ds)
        .def_readwrite("Ms", &SolveOptions::Ms)
        .def_readwrite("sigma", &SolveOptions::sigma)
        .def_readwrite("alpha", &SolveOptions::alpha);

    py::class_<CoefficientsOptions>(m, "CoefficientsOptions")
        .def(py::init<>())
        .def_readwrite("variant", &CoefficientsOptions::variant)
        .def_readwrite("L", &CoefficientsOptions::L)
        .def_readwrite("d", &CoefficientsOptions::d)
        .def_readwrite("M", &CoefficientsOptions::M)
        .def_readwrite("delta", &CoefficientsOptions::delta);

    m.def("cmd_filter_curve", &cmd_filter_curve, py::arg("opt"));
    m.def("cmd_error_curve", &cmd_error_curve, py::arg("opt"));
    m.def("cmd_probability", &cmd_probability, py::arg("opt"));
    m.def("cmd_solve", &cmd_solve, py::arg("opt"));
    m.def("cmd_coefficients", &cmd_coefficients, py::arg("opt"));

    m.attr("__version__") = "0.1.0";
}
