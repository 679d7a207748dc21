// Worked end-to-end problems: filtered spectral solutions compared with
// closed-form references.
//
// Two nonhomogeneous problems with known solutions exercise the filters:
//
//   * Poisson equation in 3 dimensions with a normalized Gaussian source of
//     width 1/sigma (radial, solved in the momentum representation), and
//   * the quantum harmonic oscillator driven at a coherent state,
//     (H + 1/2) psi = |alpha>, solved over the Fock basis.
//
// Each problem offers the exact solution and the filtered reconstruction
// obtained by replacing 1/a with F(a) from any FilterSpec.

#ifndef CVPDE_PROBLEMS_HPP
#define CVPDE_PROBLEMS_HPP

#include "cvpde/filter.hpp"
#include "cvpde/probability.hpp"

namespace cvpde {

// -div grad psi = f with f(r) = (sigma^2/(2 pi))^{3/4} exp(-sigma^2 r^2 / 4)
// in D = 3 spatial dimensions (f has unit L2 norm).
struct PoissonGaussianInstance {
    double sigma = 4.0;               // inverse source width, > 0
    static constexpr int dimension = 3;
};

// (H + 1/2) psi = |alpha> for the oscillator Hamiltonian H (so the operator
// spectrum is 2n + 1 on Fock state n) with a real coherent-state source.
struct QhoCoherentInstance {
    double alpha = 2.5;  // coherent amplitude (real)
    int n_max = 0;       // Fock cutoff for expansions and reconstructions

    QhoCoherentInstance() : QhoCoherentInstance(2.5) {}
    // Picks n_max = ceil(alpha^2 + 10|alpha| + 20), comfortably past the
    // Poisson-weight tail so the dropped mass is below double precision.
    explicit QhoCoherentInstance(double alpha_);
    QhoCoherentInstance(double alpha_, int n_max_);
};

// Exact radial solution psi(r) of the Poisson problem,
//   psi(r) = erf(sigma r / sqrt(2)) / (r sqrt(2 sqrt(pi) sigma^3)),
// with the analytic r -> 0 limit substituted at r = 0.  Requires r >= 0.
double poisson_exact(const PoissonGaussianInstance& inst, double r);

// Filtered reconstruction: the momentum-space solution uses F(k^2) in place
// of 1/k^2 under the radial inverse Fourier transform, evaluated by adaptive
// quadrature.  With spec = exact() this reproduces poisson_exact.
double poisson_approx(const PoissonGaussianInstance& inst,
                      const FilterSpec& spec, double r);

// Exact oscillator solution psi(x) = sum_n c_n phi_n(x) / (2n+1) with
// c_n = e^{-alpha^2/2} alpha^n / sqrt(n!), summed by a scaled recurrence
// that never forms alpha^n or n! separately.
double qho_exact(const QhoCoherentInstance& inst, double x);

// Same series with 1/(2n+1) replaced by F(2n+1).
double qho_approx(const QhoCoherentInstance& inst, const FilterSpec& spec,
                  double x);

// The oscillator problem's spectral data: entries (a_n, f_n) = (2n+1, c_n)
// for n = 0..n_max, NormKind::unit (the tail beyond n_max is negligible by
// construction).  Feed to success_probability.
SpectralDecomposition qho_spectral(const QhoCoherentInstance& inst);

}  // namespace cvpde

#endif  // CVPDE_PROBLEMS_HPP
