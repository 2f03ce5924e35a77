#ifndef SSVG_QUADRATURE_HPP
#define SSVG_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace ssvg {

// Gauss-Legendre rule on (-1, 1); nodes never touch the endpoints, so
// integrable endpoint singularities can be handled by geometric grading.
struct GaussRule {
    std::vector<double> x, w;
    explicit GaussRule(int n);
    static const GaussRule& of(int n);
};

struct QuadOptions {
    int order = 16;   // Gauss points per cell
    int levels = 40;  // geometric refinement levels toward singular endpoints
};

template <class F>
double gauss_cell(F&& f, double a, double b, const GaussRule& r) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i)
        s += r.w[i] * f(c + h * r.x[i]);
    return s * h;
}

// Composite Gauss quadrature of f over [a,b].  Endpoints flagged singular
// get a geometric mesh (ratio 1/2, `levels` cells) so power-type integrable
// singularities are resolved to near machine precision.
double graded_integrate(const std::function<double(double)>& f, double a, double b,
                        bool sing_a, bool sing_b, const QuadOptions& opt = {});

// Exact moment of the power weight: integral of s^p over [c,d], 0 <= c < d.
// c == 0 requires p > -1; p == -1 handled by the logarithm.
double power_moment(double p, double c, double d);

// Integral of s^p * (A + B*s) over [c,d].  For c == 0 with p <= -1 the
// constant part must vanish (paths pinned to 0 at the origin).
double linear_weighted_cell(double p, double c, double d, double A, double B);

} // namespace ssvg

#endif
