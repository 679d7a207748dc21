// Normalized harmonic-oscillator eigenfunctions (Hermite functions).

#ifndef CVPDE_HERMITE_HPP
#define CVPDE_HERMITE_HPP

namespace cvpde {

// Value of the n-th normalized oscillator eigenfunction
//
//   phi_n(z) = (2^n n! sqrt(pi))^{-1/2} H_n(z) e^{-z^2/2},
//
// i.e. the L2-orthonormal Fock-basis position wavefunction.  Evaluated with
// the normalized three-term recurrence
//
//   phi_{n+1}(z) = sqrt(2/(n+1)) z phi_n(z) - sqrt(n/(n+1)) phi_{n-1}(z),
//
// which keeps every intermediate bounded by pi^{-1/4} < 0.76, so there is no
// overflow or underflow for any n up to (at least) 500 and |z| up to 40.
//
// Requires n >= 0 (throws std::invalid_argument otherwise).
double hermite_function(int n, double z);

}  // namespace cvpde

#endif  // CVPDE_HERMITE_HPP
