#include "doctest.h"

#include "cvpde/hermite.hpp"
#include "cvpde/problems.hpp"

#include "support.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace cvpde;

namespace {

double sup_deviation_qho(const QhoCoherentInstance& inst,
                         const FilterSpec& spec,
                         const std::vector<double>& xs) {
    double worst = 0.0;
    for (double x : xs)
        worst = std::max(worst,
                         std::abs(qho_approx(inst, spec, x) - qho_exact(inst, x)));
    return worst;
}

double sup_deviation_poisson(const PoissonGaussianInstance& inst,
                             const FilterSpec& spec,
                             const std::vector<double>& rs) {
    double worst = 0.0;
    for (double r : rs)
        worst = std::max(
            worst, std::abs(poisson_approx(inst, spec, r) - poisson_exact(inst, r)));
    return worst;
}

}  // namespace

TEST_SUITE("problems") {

TEST_CASE("poisson: exact solution closed forms") {
    const PoissonGaussianInstance inst;  // sigma = 4
    const double s = inst.sigma;
    const double pref = 1.0 / std::sqrt(2.0 * std::sqrt(M_PI) * s * s * s);

    // Analytic r -> 0 limit, its frozen value, and continuity into it.
    CHECK(poisson_exact(inst, 0.0) ==
          doctest::Approx(pref * s * std::sqrt(2.0 / M_PI)).epsilon(1e-14));
    CHECK(poisson_exact(inst, 0.0) ==
          doctest::Approx(0.2118886).epsilon(1e-6));
    CHECK(poisson_exact(inst, 1e-12) ==
          doctest::Approx(poisson_exact(inst, 0.0)).epsilon(1e-8));

    // Generic radius against the erf form.
    CHECK(poisson_exact(inst, 0.8) ==
          doctest::Approx(pref * std::erf(s * 0.8 / std::sqrt(2.0)) / 0.8)
              .epsilon(1e-14));

    // Far field: r psi(r) plateaus at the source's total weight.
    CHECK(10.0 * poisson_exact(inst, 10.0) ==
          doctest::Approx(pref).epsilon(1e-14));
}

TEST_CASE("poisson: the exact filter reproduces the closed form") {
    const PoissonGaussianInstance inst;
    const FilterSpec exact = FilterSpec::exact();
    for (double r : {0.0, 0.3, 1.0, 2.5, 5.0, 8.0, 10.0}) {
        CHECK(std::abs(poisson_approx(inst, exact, r) -
                       poisson_exact(inst, r)) < 1e-8);
    }
}

TEST_CASE("poisson: filtered solutions improve with evolution time") {
    const PoissonGaussianInstance inst;
    const std::vector<double> rs = testsupport::linspace(0.1, 10.0, 12);
    const double sup1 =
        sup_deviation_poisson(inst, FilterSpec::proposal1(0, 1.0, 1.0), rs);
    const double sup10 =
        sup_deviation_poisson(inst, FilterSpec::proposal1(0, 1.0, 10.0), rs);
    CHECK(2.0 * sup10 < sup1);

    // Long-time even proposal: percent-level agreement near the core.
    const FilterSpec p2 = FilterSpec::proposal2(0, 1.0, 100.0);
    const double rel =
        std::abs(poisson_approx(inst, p2, 0.5) / poisson_exact(inst, 0.5) - 1.0);
    CHECK(rel < 0.05);
}

TEST_CASE("poisson: the truncated original loses the far field") {
    // F(a) ~ 1/a^2 instead of 1/a at large a translates into a solution
    // whose r psi(r) plateau decays instead of staying flat.
    const PoissonGaussianInstance inst;
    const FilterSpec arr = FilterSpec::arrazola_truncated(20.0, 140, 0.01);
    const double near = 5.0 * poisson_approx(inst, arr, 5.0);
    const double far = 15.0 * poisson_approx(inst, arr, 15.0);
    CHECK(std::abs(far) < 0.5 * std::abs(near));
    // ...while the exact plateau is flat to double precision.
    CHECK(15.0 * poisson_exact(inst, 15.0) ==
          doctest::Approx(5.0 * poisson_exact(inst, 5.0)).epsilon(1e-12));
}

TEST_CASE("oscillator: exact solution against a direct Fock sum") {
    const QhoCoherentInstance inst(2.5);
    // Independent route: form c_n and phi_n(0) separately and sum
    // c_n phi_n(0) / (2n+1).  (The production series never builds either.)
    double c = std::exp(-0.5 * inst.alpha * inst.alpha);
    double direct = 0.0;
    for (int n = 0; n <= inst.n_max; ++n) {
        direct += c * hermite_function(n, 0.0) / (2.0 * n + 1.0);
        c *= inst.alpha / std::sqrt(n + 1.0);
    }
    CHECK(qho_exact(inst, 0.0) == doctest::Approx(direct).epsilon(1e-12));
    CHECK(qho_exact(inst, 0.0) ==
          doctest::Approx(2.2401310274174614e-2).epsilon(1e-12));

    // Cutoff saturation: doubling n_max changes nothing measurable.
    const QhoCoherentInstance wide(2.5, 2 * inst.n_max);
    for (double x : {-1.0, 0.0, 2.0, 5.0}) {
        CHECK(std::abs(qho_exact(inst, x) - qho_exact(wide, x)) < 1e-12);
    }
}

TEST_CASE("oscillator: alpha = 0 collapses to the ground state") {
    const QhoCoherentInstance inst(0.0);
    const double x = 0.7;
    CHECK(qho_exact(inst, x) ==
          doctest::Approx(std::pow(M_PI, -0.25) * std::exp(-0.5 * x * x))
              .epsilon(1e-14));
}

TEST_CASE("oscillator: the exact filter reproduces the closed form") {
    const QhoCoherentInstance inst(2.5);
    const FilterSpec exact = FilterSpec::exact();
    for (double x : testsupport::linspace(-1.0, 5.0, 13)) {
        CHECK(std::abs(qho_approx(inst, exact, x) - qho_exact(inst, x)) <
              1e-14);
    }
}

TEST_CASE("oscillator: filtered solutions improve with evolution time") {
    const QhoCoherentInstance inst(2.5);
    const std::vector<double> xs = testsupport::linspace(-1.0, 5.0, 13);
    for (bool odd : {true, false}) {
        const FilterSpec t1 = odd ? FilterSpec::proposal1(0, 1.0, 1.0)
                                  : FilterSpec::proposal2(0, 1.0, 1.0);
        FilterSpec t10 = t1;
        t10.t = 10.0;
        const double sup1 = sup_deviation_qho(inst, t1, xs);
        const double sup10 = sup_deviation_qho(inst, t10, xs);
        CHECK(2.0 * sup10 < sup1);
    }
}

TEST_CASE("oscillator: the truncated original degrades away from the core") {
    const QhoCoherentInstance inst(2.5);
    const FilterSpec arr = FilterSpec::arrazola_truncated(20.0, 140, 0.01);
    const double dev1 = std::abs(qho_approx(inst, arr, 1.0) - qho_exact(inst, 1.0));
    const double dev4 = std::abs(qho_approx(inst, arr, 4.0) - qho_exact(inst, 4.0));
    CHECK(dev4 > dev1);
    CHECK(dev4 > 1e-3);  // visible artifact, not rounding noise
}

TEST_CASE("oscillator: spectral decomposition") {
    const QhoCoherentInstance inst(2.5);
    CHECK(inst.n_max == 52);  // default cutoff rule
    const SpectralDecomposition f = qho_spectral(inst);
    CHECK(f.norm_kind == NormKind::unit);
    REQUIRE(f.entries.size() == std::size_t(inst.n_max + 1));

    double total = 0.0;
    int peak = -1;
    double peak_weight = -1.0;
    for (int n = 0; n <= inst.n_max; ++n) {
        CHECK(f.entries[n].a == 2.0 * n + 1.0);
        const double w = f.entries[n].f * f.entries[n].f;
        total += w;
        if (w > peak_weight) {
            peak_weight = w;
            peak = n;
        }
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(peak == 6);  // Poisson(alpha^2 = 6.25) mode

    // alpha = 0: all weight on the ground state.
    const SpectralDecomposition g = qho_spectral(QhoCoherentInstance(0.0));
    CHECK(g.entries[0].f == 1.0);
    for (std::size_t i = 1; i < g.entries.size(); ++i)
        CHECK(g.entries[i].f == 0.0);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(poisson_exact({0.0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(poisson_exact({-4.0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(poisson_exact({4.0}, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(poisson_exact({4.0}, std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(QhoCoherentInstance(std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(QhoCoherentInstance(2.5, -1), std::invalid_argument);
    CHECK_THROWS_AS(qho_exact(QhoCoherentInstance(2.5), HUGE_VAL),
                    std::invalid_argument);
}

}  // TEST_SUITE
