#ifndef SSVG_SPECIAL_HPP
#define SSVG_SPECIAL_HPP

#include <stdexcept>
#include <string>

namespace ssvg {

// Thrown when the hypergeometric series fails to reach the tail tolerance
// within the term cap.
struct hyp2f1_error : std::runtime_error {
    double a, b, c, x;
    hyp2f1_error(double a_, double b_, double c_, double x_);
};

// Gauss hypergeometric function 2F1(a,b;c;x) on the non-positive real axis,
// x <= 0.  The argument is mapped into [0,1) (Pfaff transformation for
// x >= -1, the 1/x connection formula for x < -1) before series summation.
// Relative accuracy ~1e-12 or better away from degenerate parameters.
double gauss_2f1(double a, double b, double c, double x);

// Normalization constant of the fBm Volterra kernel,
// c(H) = sqrt(2H * Gamma(3/2-H) / (Gamma(H+1/2) * Gamma(2-2H))).
double fbm_c(double H);

} // namespace ssvg

#endif
