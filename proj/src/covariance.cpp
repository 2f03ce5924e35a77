#include "ssvg/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ssvg {

double fbm_cov(HurstIndex H, double s, double t) {
    if (s < 0.0 || t < 0.0) throw std::domain_error("fbm_cov: s, t must be >= 0");
    const double h2 = 2.0 * H.value;
    return 0.5 * (std::pow(s, h2) + std::pow(t, h2) - std::pow(std::abs(t - s), h2));
}

double nalpha_cov(AlphaParam alpha, double s, double t) {
    if (s < 0.0 || t < 0.0) throw std::domain_error("nalpha_cov: s, t must be >= 0");
    const double m = std::min(s, t);
    const double p = 2.0 * alpha.value + 1.0;
    return std::pow(m, p) / p;
}

CovarianceOracle::CovarianceOracle(KernelSpec spec, Mode mode, QuadOptions quad)
    : spec_(std::move(spec)), mode_(mode), quad_(quad) {
    if (mode_ == Mode::analytic && spec_.variant() == KernelSpec::Variant::custom)
        mode_ = Mode::quadrature; // no closed form for custom factors
}

double CovarianceOracle::operator()(double s, double t) const {
    if (s < 0.0 || t < 0.0) throw std::domain_error("CovarianceOracle: s, t must be >= 0");
    if (s == 0.0 || t == 0.0) return 0.0;
    if (mode_ == Mode::analytic) {
        switch (spec_.variant()) {
        case KernelSpec::Variant::fbm:
            return fbm_cov(HurstIndex(spec_.hurst()), s, t);
        case KernelSpec::Variant::power_markov: {
            const double a = spec_.pm_alpha(), b = spec_.beta(), c = spec_.pm_c();
            const double lo = std::min(s, t);
            return c * c * std::pow(s * t, b - a - 0.5) *
                   std::pow(lo, 2.0 * a + 1.0) / (2.0 * a + 1.0);
        }
        case KernelSpec::Variant::custom:
            break;
        }
    }
    return kernel_cov(s, t);
}

double CovarianceOracle::kernel_cov(double s, double t) const {
    if (s < 0.0 || t < 0.0) throw std::domain_error("kernel_cov: s, t must be >= 0");
    if (s == 0.0 || t == 0.0) return 0.0;
    const double lo = std::min(s, t), hi = std::max(s, t);
    // Integrand z(lo,u) z(hi,u) is singular at u = lo (kernel diagonal) and
    // can carry power behavior at u = 0.
    return graded_integrate(
        [&](double u) { return kernel_eval(spec_, lo, u) * kernel_eval(spec_, hi, u); },
        0.0, lo, /*sing_a=*/true, /*sing_b=*/true, quad_);
}

CovMatrix cov_matrix(const CovarianceOracle& oracle, const TimeGrid& grid, bool jitter) {
    grid.validate();
    const int n = static_cast<int>(grid.size());
    CovMatrix out;
    out.grid = grid;
    out.entries.resize(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            const double v = oracle(grid[j], grid[i]);
            out.entries(i, j) = v;
            out.entries(j, i) = v;
        }
    if (jitter && n > 0) {
        const double eps = 1e-12 * out.entries.diagonal().maxCoeff();
        out.entries.diagonal().array() += eps;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(out.entries,
                                                      Eigen::EigenvaluesOnly);
    out.smallest_eigenvalue = es.eigenvalues().minCoeff();
    out.positive_definite = out.smallest_eigenvalue > 0.0;
    return out;
}

double selfsim_bound_check(const CovarianceOracle& oracle,
                           std::span<const std::pair<double, double>> samples) {
    const double b = oracle.beta();
    const double r11 = oracle(1.0, 1.0);
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& [s, t] : samples) {
        if (!(s > 0.0 && t > 0.0))
            throw std::domain_error("selfsim_bound_check: s, t must be positive");
        worst = std::max(worst,
                         std::abs(oracle(s, t)) - r11 * std::pow(s, b) * std::pow(t, b));
    }
    return worst;
}

double transform_cov_oracle(const CovarianceOracle& oracle, AlphaParam alpha,
                            double s, double t, const QuadOptions& opt) {
    if (!(0.0 < s && s <= t))
        throw std::domain_error("transform_cov_oracle: need 0 < s <= t");
    const double a = alpha.value, b = oracle.beta();
    const double g = b - a - 0.5, d = a - b - 0.5;
    const double c1 = 2.0 * a + 1.0;

    // R(x, u) has a kink across u = x (e.g. |x-u|^2H for fBm); integrals are
    // split there and graded toward 0 and toward the kink.
    auto weighted = [&](double x, double lo, double hi) {
        auto f = [&](double u) { return std::pow(u, d) * oracle(x, u); };
        if (x <= lo || x >= hi)
            return graded_integrate(f, lo, hi, lo == 0.0, true, opt);
        return graded_integrate(f, lo, x, lo == 0.0, true, opt) +
               graded_integrate(f, x, hi, true, true, opt);
    };

    const double t1 = oracle(s, t);
    const double t2 = c1 * std::pow(t, g) * weighted(s, 0.0, t);
    const double t3 = c1 * std::pow(s, g) * weighted(t, 0.0, s);

    // Double integral, reduced to nested 1-D quadrature: the inner integral
    // over v in (0,t) is a smooth-enough function of u on (0,s).
    QuadOptions inner = opt;
    auto gfun = [&](double u) { return weighted(u, 0.0, t); };
    const double i12 = graded_integrate(
        [&](double u) { return std::pow(u, d) * gfun(u); }, 0.0, s,
        /*sing_a=*/true, /*sing_b=*/true, inner);
    const double t4 = c1 * c1 * std::pow(s * t, g) * i12;

    return t1 - t2 - t3 + t4;
}

} // namespace ssvg
