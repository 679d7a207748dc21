// Acceptance checks: one line of output per criterion, [PASS]/[FAIL] with
// the measured numbers.  Exit code 0 only if every criterion passes.
//
// Each block pins its own tolerances as named constants next to the check
// so the accepted behaviour is readable in one place.

#include "cvpde/commands.hpp"
#include "cvpde/filter.hpp"
#include "cvpde/probability.hpp"
#include "cvpde/problems.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace cvpde;

namespace {

int failures = 0;

void report(int idx, bool ok, const std::string& label,
            const std::string& detail) {
    std::printf("[%s] %2d. %s (%s)\n", ok ? "PASS" : "FAIL", idx,
                label.c_str(), detail.c_str());
    if (!ok) ++failures;
}

void run(int idx, const std::string& label,
         const std::function<std::pair<bool, std::string>()>& body) {
    try {
        const auto [ok, detail] = body();
        report(idx, ok, label, detail);
    } catch (const std::exception& e) {
        report(idx, false, label, std::string("exception: ") + e.what());
    }
}

std::vector<double> logspace(double lo, double hi, int n) {
    return GridSpec{lo, hi, n, true}.points();
}

std::vector<double> linspace(double lo, double hi, int n) {
    return GridSpec{lo, hi, n, false}.points();
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double loglog_slope(const std::vector<double>& x,
                    const std::vector<double>& y) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

int main() {
    // -----------------------------------------------------------------------
    run(1, "truncated original: F(1) = 1 at delta = 0 for d in {1,20,60,140}",
        [] {
            constexpr double kTol = 1e-12;
            double worst = 0.0;
            for (int d : {1, 20, 60, 140}) {
                const FilterSpec spec =
                    FilterSpec::arrazola_truncated(20.0, d, 0.0);
                worst = std::max(worst, std::abs(eval_filter(spec, 1.0) - 1.0));
            }
            return std::make_pair(worst <= kTol,
                                  "max |F(1)-1| = " + fmt(worst) +
                                      ", tol " + fmt(kTol));
        });

    // -----------------------------------------------------------------------
    run(2, "truncated original: large-a tail decays like 1/a^2, not 1/a",
        [] {
            // a^2 F(a) must settle to a positive constant: its spread over
            // a in [1e2, 1e4] stays below 1%.
            constexpr double kSpread = 0.01;
            double worst_spread = 0.0;
            bool positive = true;
            for (int d : {1, 20, 60, 140}) {
                const FilterSpec spec =
                    FilterSpec::arrazola_truncated(20.0, d, 0.0);
                double lo = HUGE_VAL, hi = -HUGE_VAL;
                for (double a : logspace(1e2, 1e4, 41)) {
                    const double v = a * a * eval_filter(spec, a);
                    positive = positive && (v > 0.0);
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
                worst_spread = std::max(worst_spread, hi / lo - 1.0);
            }
            return std::make_pair(positive && worst_spread <= kSpread,
                                  "max spread of a^2 F = " + fmt(worst_spread) +
                                      ", tol " + fmt(kSpread));
        });

    // -----------------------------------------------------------------------
    run(3, "proposals: |a| F(a) -> 1 in the far tail for every window width",
        [] {
            constexpr double kTol = 1e-6;
            constexpr double kA = 1e6;
            double worst = 0.0;
            for (bool odd : {true, false})
                for (int M : {0, 1})
                    for (double delta : {0.01, 0.1, 1.0})
                        for (double t : {1.0, 10.0}) {
                            const FilterSpec spec =
                                odd ? FilterSpec::proposal1(M, delta, t)
                                    : FilterSpec::proposal2(M, delta, t);
                            worst = std::max(
                                worst,
                                std::abs(std::abs(kA * eval_filter(spec, kA)) -
                                         1.0));
                        }
            return std::make_pair(worst <= kTol,
                                  "max ||a|F - 1| at a = 1e6: " + fmt(worst) +
                                      ", tol " + fmt(kTol));
        });

    // -----------------------------------------------------------------------
    run(4, "proposals: M = 1 error decays with log-log slope -4",
        [] {
            constexpr double kSlopeLo = -4.1, kSlopeHi = -3.9;
            const std::vector<double> grid = logspace(1e2, 1e4, 21);
            std::string detail;
            bool ok = true;
            for (bool odd : {true, false}) {
                const FilterSpec spec =
                    odd ? FilterSpec::proposal1(1, 1.0, 0.1)
                        : FilterSpec::proposal2(1, 1.0, 0.1);
                std::vector<double> eps;
                for (double a : grid) eps.push_back(relative_error(spec, a));
                const double slope = loglog_slope(grid, eps);
                ok = ok && (slope >= kSlopeLo && slope <= kSlopeHi);
                if (!detail.empty()) detail += ", ";
                detail += std::string(odd ? "odd" : "even") + " slope " +
                          fmt(slope);
            }
            return std::make_pair(ok, detail + "; window [" + fmt(kSlopeLo) +
                                           ", " + fmt(kSlopeHi) + "]");
        });

    // -----------------------------------------------------------------------
    run(5, "proposals: M = 1 coefficient ratios match the hand solutions",
        [] {
            constexpr double kRel = 1e-10;
            double worst = 0.0;
            for (double delta : {0.0, 0.01, 1.0}) {
                const double c = 1.0 + delta * delta;
                const AncillaState p1 = proposal1_coefficients(1, delta);
                const double want1 = (3.0 + 4.0 / c) / std::sqrt(6.0);
                const double got1 =
                    p1.coefficients[0].value / p1.coefficients[1].value;
                worst = std::max(worst, std::abs(got1 / want1 - 1.0));
                const AncillaState p2 = proposal2_coefficients(1, delta);
                const double want2 = (1.0 + 4.0 / c) / std::sqrt(2.0);
                const double got2 =
                    p2.coefficients[0].value / p2.coefficients[1].value;
                worst = std::max(worst, std::abs(got2 / want2 - 1.0));
            }
            return std::make_pair(worst <= kRel,
                                  "max ratio deviation " + fmt(worst) +
                                      ", tol " + fmt(kRel));
        });

    // -----------------------------------------------------------------------
    run(6, "closed-form evaluator agrees with the quadrature oracle",
        [] {
            constexpr double kTol = 1e-8;
            constexpr double kOracleTol = 1e-10;
            const FilterSpec specs[] = {
                FilterSpec::arrazola_truncated(20.0, 7, 0.1),
                FilterSpec::proposal1(1, 0.01, 10.0),
                FilterSpec::proposal2(0, 1.0, 1.0),
            };
            double worst = 0.0;
            for (const FilterSpec& spec : specs)
                for (double a : logspace(1e-2, 1e2, 20))
                    worst = std::max(worst,
                                     std::abs(eval_filter(spec, a) -
                                              oracle_filter(spec, a,
                                                            kOracleTol)));
            return std::make_pair(worst <= kTol,
                                  "max |eval - oracle| = " + fmt(worst) +
                                      ", tol " + fmt(kTol));
        });

    // -----------------------------------------------------------------------
    run(7, "success probabilities reproduce the quoted working points",
        [] {
            constexpr double kRel = 0.03;
            const SpectralDecomposition f =
                qho_spectral(QhoCoherentInstance(2.5));

            const double p_small = success_probability(
                FilterSpec::arrazola_truncated(20.0, 140, 0.01), f);
            const double p_wide = success_probability(
                FilterSpec::arrazola_truncated(20.0, 140, 1.0), f);
            const bool arr_ok =
                std::abs(p_small / 3.25e-8 - 1.0) <= kRel &&
                std::abs(p_wide / 1.36e-4 - 1.0) <= kRel;

            // The proposal working points are quoted for one evolution time;
            // accept whichever of t = 5, 10 matches both, and say which.
            std::string matched = "none";
            for (double t : {5.0, 10.0}) {
                const double p1 = success_probability(
                    FilterSpec::proposal1(0, 1.0, t), f);
                const double p2 = success_probability(
                    FilterSpec::proposal2(0, 1.0, t), f);
                if (std::abs(p1 / 3.31e-7 - 1.0) <= kRel &&
                    std::abs(p2 / 1.79e-3 - 1.0) <= kRel) {
                    matched = "t = " + fmt(t);
                    break;
                }
            }
            const bool ok = arr_ok && matched != "none";
            return std::make_pair(
                ok, "P0(0.01) = " + fmt(p_small) + " vs 3.25e-8, P0(1) = " +
                        fmt(p_wide) + " vs 1.36e-4; proposals matched at " +
                        matched + "; rel tol " + fmt(kRel));
        });

    // -----------------------------------------------------------------------
    run(8, "worked problems: the exact filter reproduces the closed forms",
        [] {
            constexpr double kTol = 1e-8;
            const FilterSpec exact = FilterSpec::exact();
            const PoissonGaussianInstance poisson;  // sigma = 4
            double worst_p = 0.0;
            for (double r : linspace(0.1, 10.0, 67))
                worst_p = std::max(worst_p,
                                   std::abs(poisson_approx(poisson, exact, r) -
                                            poisson_exact(poisson, r)));
            const QhoCoherentInstance qho(2.5);
            double worst_q = 0.0;
            for (double x : linspace(-1.0, 5.0, 61))
                worst_q = std::max(worst_q,
                                   std::abs(qho_approx(qho, exact, x) -
                                            qho_exact(qho, x)));
            return std::make_pair(worst_p <= kTol && worst_q <= kTol,
                                  "poisson sup " + fmt(worst_p) + ", qho sup " +
                                      fmt(worst_q) + ", tol " + fmt(kTol));
        });

    // -----------------------------------------------------------------------
    run(9, "worked problems: filtered solutions improve with evolution time",
        [] {
            const PoissonGaussianInstance poisson;
            const QhoCoherentInstance qho(2.5);
            const std::vector<double> rs = linspace(0.1, 10.0, 12);
            const std::vector<double> xs = linspace(-1.0, 5.0, 13);
            std::string detail;
            bool ok = true;
            for (bool odd : {true, false}) {
                const auto make = [odd](double t) {
                    return odd ? FilterSpec::proposal1(0, 1.0, t)
                               : FilterSpec::proposal2(0, 1.0, t);
                };
                std::vector<double> psup;
                for (double t : {1.0, 10.0, 100.0}) {
                    const FilterSpec spec = make(t);
                    double sup = 0.0;
                    for (double r : rs)
                        sup = std::max(
                            sup, std::abs(poisson_approx(poisson, spec, r) -
                                          poisson_exact(poisson, r)));
                    psup.push_back(sup);
                }
                ok = ok && psup[0] > psup[1] && psup[1] > psup[2];

                double qsup1 = 0.0, qsup10 = 0.0;
                for (double x : xs) {
                    qsup1 = std::max(qsup1,
                                     std::abs(qho_approx(qho, make(1.0), x) -
                                              qho_exact(qho, x)));
                    qsup10 = std::max(qsup10,
                                      std::abs(qho_approx(qho, make(10.0), x) -
                                               qho_exact(qho, x)));
                }
                ok = ok && qsup1 > qsup10;

                if (!detail.empty()) detail += "; ";
                detail += std::string(odd ? "odd" : "even") + " poisson " +
                          fmt(psup[0]) + " > " + fmt(psup[1]) + " > " +
                          fmt(psup[2]) + ", qho " + fmt(qsup1) + " > " +
                          fmt(qsup10);
            }
            return std::make_pair(ok, detail);
        });

    // -----------------------------------------------------------------------
    run(10, "success probability scales like delta^2 in the narrow window",
        [] {
            constexpr double kRel = 0.01;
            const SpectralDecomposition f =
                qho_spectral(QhoCoherentInstance(2.5));
            const std::function<FilterSpec(double)> makers[] = {
                [](double d) {
                    return FilterSpec::arrazola_truncated(20.0, 140, d);
                },
                [](double d) { return FilterSpec::proposal1(0, d, 10.0); },
                [](double d) { return FilterSpec::proposal2(0, d, 10.0); },
            };
            double worst = 0.0;
            for (const auto& make : makers) {
                const double r3 = success_probability(make(1e-3), f) / 1e-6;
                const double r4 = success_probability(make(1e-4), f) / 1e-8;
                worst = std::max(worst, std::abs(r4 / r3 - 1.0));
            }
            return std::make_pair(worst <= kRel,
                                  "max |P/delta^2 drift| = " + fmt(worst) +
                                      ", tol " + fmt(kRel));
        });

    if (failures == 0)
        std::printf("all %d acceptance checks passed\n", 10);
    else
        std::printf("%d acceptance check(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
