#include "ssvg/special.hpp"

#include <cmath>
#include <cstdio>

namespace ssvg {

namespace {

constexpr int kTermCap = 10000;
constexpr double kTailTol = 1e-14;

bool is_nonpos_int(double v) {
    return v <= 0.0 && std::floor(v) == v;
}

// Plain power series sum_{n} (a)_n (b)_n / ((c)_n n!) x^n, |x| < 1.
// Caller guarantees geometric convergence (|x| <= 1/2 after the argument
// transformations used below).
double series_2f1(double a, double b, double c, double x) {
    double term = 1.0, sum = 1.0;
    for (int n = 0; n < kTermCap; ++n) {
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * x;
        sum += term;
        if (std::abs(term) <= kTailTol * std::abs(sum))
            return sum;
    }
    throw hyp2f1_error(a, b, c, x);
}

// Terminating case: a is a non-positive integer, the series is a polynomial.
double terminating_2f1(double a, double b, double c, double x) {
    const int m = static_cast<int>(std::lround(-a));
    double term = 1.0, sum = 1.0;
    for (int n = 0; n < m; ++n) {
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * x;
        sum += term;
    }
    return sum;
}

// Pfaff transformation, valid for x in [-1, 0]: maps the argument to
// x/(x-1) in [0, 1/2].
double pfaff_2f1(double a, double b, double c, double x) {
    if (x == 0.0) return 1.0;
    return std::pow(1.0 - x, -a) * series_2f1(a, c - b, c, x / (x - 1.0));
}

} // namespace

hyp2f1_error::hyp2f1_error(double a_, double b_, double c_, double x_)
    : std::runtime_error("2F1 series did not converge at (a=" + std::to_string(a_) +
                         ", b=" + std::to_string(b_) + ", c=" + std::to_string(c_) +
                         ", x=" + std::to_string(x_) + ")"),
      a(a_), b(b_), c(c_), x(x_) {}

double gauss_2f1(double a, double b, double c, double x) {
    if (is_nonpos_int(c))
        throw std::domain_error("gauss_2f1: c must not be a non-positive integer");
    if (x > 0.0)
        throw std::domain_error("gauss_2f1: only x <= 0 is supported");
    if (a == 0.0 || b == 0.0 || x == 0.0) return 1.0;
    if (is_nonpos_int(a)) return terminating_2f1(a, b, c, x);
    if (is_nonpos_int(b)) return terminating_2f1(b, a, c, x);
    if (x >= -1.0) return pfaff_2f1(a, b, c, x);

    // x < -1: connection formula in 1/x, each piece evaluated through the
    // Pfaff transformation so the series argument stays in [0, 1/2].
    const double d = a - b;
    if (std::floor(d) == d)
        throw std::domain_error("gauss_2f1: a-b integer not supported for x < -1");
    const double w = 1.0 / x; // in (-1, 0)
    const double g1 = std::tgamma(c) * std::tgamma(b - a) /
                      (std::tgamma(b) * std::tgamma(c - a));
    const double g2 = std::tgamma(c) * std::tgamma(a - b) /
                      (std::tgamma(a) * std::tgamma(c - b));
    const double t1 = std::pow(-x, -a) * g1 * pfaff_2f1(a, a - c + 1.0, a - b + 1.0, w);
    const double t2 = std::pow(-x, -b) * g2 * pfaff_2f1(b, b - c + 1.0, b - a + 1.0, w);
    return t1 + t2;
}

double fbm_c(double H) {
    if (H <= 0.0 || H >= 1.0)
        throw std::domain_error("fbm_c: H must lie in (0,1)");
    return std::sqrt(2.0 * H * std::tgamma(1.5 - H) /
                     (std::tgamma(H + 0.5) * std::tgamma(2.0 - 2.0 * H)));
}

} // namespace ssvg
