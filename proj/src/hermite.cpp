#include "cvpde/hermite.hpp"

#include <cmath>
#include <stdexcept>

namespace cvpde {

double hermite_function(int n, double z) {
    if (n < 0)
        throw std::invalid_argument("hermite_function: order must be >= 0");
    // phi_0 = pi^{-1/4} e^{-z^2/2}; the normalized recurrence then keeps all
    // iterates in [-pi^{-1/4}, pi^{-1/4}].  For |z| beyond ~38.6 even phi_0
    // underflows; e^{-z^2/2} with z^2/2 > 745 is a hard zero in double
    // precision and every higher phi_n(z) vanishes along with it only far
    // beyond the classically allowed region, which callers never reach.
    static const double pi_quarter = std::pow(M_PI, -0.25);
    double prev = 0.0;
    double cur = pi_quarter * std::exp(-0.5 * z * z);
    for (int k = 0; k < n; ++k) {
        double next = std::sqrt(2.0 / (k + 1)) * z * cur -
                      std::sqrt(double(k) / (k + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace cvpde
