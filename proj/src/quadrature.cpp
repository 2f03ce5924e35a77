#include "ssvg/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace ssvg {

GaussRule::GaussRule(int n) {
    if (n < 1) throw std::invalid_argument("GaussRule: order must be >= 1");
    x.resize(n);
    w.resize(n);
    // Newton iteration on Legendre polynomials, Chebyshev initial guess.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
}

const GaussRule& GaussRule::of(int n) {
    static std::mutex mu;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, GaussRule(n)).first;
    return it->second;
}

namespace {

// One-sided geometric mesh, singularity at `a`.
double graded_left(const std::function<double(double)>& f, double a, double b,
                   const QuadOptions& opt) {
    const GaussRule& r = GaussRule::of(opt.order);
    const double L = b - a;
    double sum = 0.0;
    double hi = L;
    for (int k = 0; k < opt.levels; ++k) {
        const double lo = L * std::ldexp(1.0, -(k + 1));
        sum += gauss_cell(f, a + lo, a + hi, r);
        hi = lo;
    }
    sum += gauss_cell(f, a, a + hi, r); // innermost cell, open rule
    return sum;
}

} // namespace

double graded_integrate(const std::function<double(double)>& f, double a, double b,
                        bool sing_a, bool sing_b, const QuadOptions& opt) {
    if (!(b > a)) {
        if (b == a) return 0.0;
        throw std::invalid_argument("graded_integrate: b < a");
    }
    const GaussRule& r = GaussRule::of(opt.order);
    if (sing_a && sing_b) {
        const double m = 0.5 * (a + b);
        auto neg = [&f](double u) { return f(u); };
        auto flip = [&f, a, b](double u) { return f(a + b - u); };
        return graded_left(neg, a, m, opt) + graded_left(flip, a, m, opt);
    }
    if (sing_a) return graded_left(f, a, b, opt);
    if (sing_b) {
        auto flip = [&f, a, b](double u) { return f(a + b - u); };
        return graded_left(flip, a, b, opt);
    }
    // Smooth integrand: a few uniform cells.
    const int cells = 8;
    double sum = 0.0;
    const double h = (b - a) / cells;
    for (int k = 0; k < cells; ++k)
        sum += gauss_cell(f, a + k * h, a + (k + 1) * h, r);
    return sum;
}

double power_moment(double p, double c, double d) {
    if (c < 0.0 || d < c) throw std::invalid_argument("power_moment: need 0 <= c <= d");
    if (d == c) return 0.0;
    if (c == 0.0) {
        if (p <= -1.0) throw std::domain_error("power_moment: divergent at 0");
        return std::pow(d, p + 1.0) / (p + 1.0);
    }
    if (p == -1.0) return std::log(d / c);
    return (std::pow(d, p + 1.0) - std::pow(c, p + 1.0)) / (p + 1.0);
}

double linear_weighted_cell(double p, double c, double d, double A, double B) {
    if (c == 0.0 && p <= -1.0) {
        if (std::abs(A) > 1e-12 * (std::abs(B) * d + 1e-300))
            throw std::domain_error(
                "linear_weighted_cell: non-vanishing value at origin with p <= -1");
        if (p + 1.0 <= -1.0)
            throw std::domain_error("linear_weighted_cell: weight too singular (p <= -2)");
        return B * power_moment(p + 1.0, c, d);
    }
    return A * power_moment(p, c, d) + B * power_moment(p + 1.0, c, d);
}

} // namespace ssvg
